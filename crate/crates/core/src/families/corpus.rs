use std::sync::OnceLock;

use super::spec::{FamilySpec, GroupSpec};
use super::deligne_product;
use crate::group::GroupTable;
use crate::ring::FusionRing;

/// A named fixture ring. `spec` is absent for Deligne products.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub family: &'static str,
    pub spec: Option<FamilySpec>,
    pub ring: FusionRing,
}

const MAX_PRODUCT_RANK: usize = 20;

/// Invariant-factor lists `d1 | d2 | … | dk` (each > 1) of every abelian
/// group of order at most `max_order`, ordered by group order. The trivial
/// group appears as `[]`.
pub fn abelian_groups_up_to(max_order: usize) -> Vec<Vec<usize>> {
    fn chains(n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            out.push(prefix.clone());
            return;
        }
        // next factor d must be a multiple of the previous one and divide what
        // is left in a way that keeps the chain extendable
        for d in (min.max(2)..=n).filter(|d| n % d == 0 && d % min.max(1) == 0) {
            let rest = n / d;
            if rest == 1 || rest % d == 0 {
                prefix.push(d);
                chains(rest, d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        chains(n, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// A small generating set for the subgroup `elements` of `g`.
fn subgroup_generators(g: &GroupTable, elements: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = vec![0];
    for &x in elements {
        if current.binary_search(&x).is_err() {
            gens.push(x);
            current = g.subgroup_generated(&gens).expect("subgroup elements are in range");
        }
    }
    gens
}

/// Coset representatives (smallest member of each coset) of `gamma` in `g`.
fn coset_representatives(g: &GroupTable, gamma: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if !seen[x] {
            reps.push(x);
            for &a in gamma {
                seen[g.mul(x, a)] = true;
            }
        }
    }
    reps
}

fn entry(spec: FamilySpec) -> CorpusEntry {
    let ring = spec.build().expect("corpus parameters are valid");
    let params = spec.to_params().join(" ");
    let name = if params.is_empty() {
        spec.family().to_string()
    } else {
        format!("{}({params})", spec.family())
    };
    CorpusEntry {
        name,
        family: spec.family(),
        spec: Some(spec),
        ring,
    }
}

fn build() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let abelian = abelian_groups_up_to(16);
    let named = ["S3", "D4", "Q8"].map(|n| GroupSpec::Named(n.to_string()));

    for factors in &abelian {
        out.push(entry(FamilySpec::Pointed {
            group: GroupSpec::Abelian(factors.clone()),
        }));
    }
    for group in &named {
        out.push(entry(FamilySpec::Pointed { group: group.clone() }));
    }
    for factors in abelian.iter().filter(|f| f.iter().product::<usize>() <= 8) {
        out.push(entry(FamilySpec::Ty {
            group: GroupSpec::Abelian(factors.clone()),
        }));
    }
    for group in &named {
        out.push(entry(FamilySpec::Ty { group: group.clone() }));
    }
    for (order, kappa) in [(1, 1), (2, 1), (3, 2)] {
        let factors = if order == 1 { vec![] } else { vec![order] };
        out.push(entry(FamilySpec::NearGroup {
            group: GroupSpec::Abelian(factors),
            kappa,
        }));
    }
    for n in 0..=8 {
        out.push(entry(FamilySpec::Verlinde { n }));
    }
    out.push(entry(FamilySpec::MooreRead));
    out.push(entry(FamilySpec::Ising));
    out.push(entry(FamilySpec::YangLee));

    for factors in abelian.iter().filter(|f| f.iter().product::<usize>() <= 8) {
        let group = GroupSpec::Abelian(factors.clone());
        let table = group.table().expect("abelian group");
        for gamma in table.all_subgroups().into_iter().filter(|s| s.len() > 1) {
            let subgroup = subgroup_generators(&table, &gamma);
            for coset in coset_representatives(&table, &gamma) {
                out.push(entry(FamilySpec::GenTy {
                    group: group.clone(),
                    subgroup: subgroup.clone(),
                    coset,
                }));
            }
        }
    }
    for key in ["S3", "D4", "Q8", "A4"] {
        out.push(entry(FamilySpec::RepCorpus { key: key.to_string() }));
    }

    let bases: Vec<CorpusEntry> = [
        FamilySpec::Ising,
        FamilySpec::YangLee,
        FamilySpec::Pointed {
            group: GroupSpec::Abelian(vec![2]),
        },
        FamilySpec::Pointed {
            group: GroupSpec::Abelian(vec![3]),
        },
        FamilySpec::Verlinde { n: 3 },
        FamilySpec::MooreRead,
        FamilySpec::RepCorpus { key: "S3".into() },
    ]
    .into_iter()
    .map(entry)
    .collect();
    for (i, a) in bases.iter().enumerate() {
        for b in &bases[i..] {
            if a.ring.rank() * b.ring.rank() <= MAX_PRODUCT_RANK {
                out.push(CorpusEntry {
                    name: format!("{} ⊠ {}", a.name, b.name),
                    family: "deligne",
                    spec: None,
                    ring: deligne_product(&a.ring, &b.ring),
                });
            }
        }
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// The fixture corpus, sorted by name. Built once per process.
pub fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    CORPUS.get_or_init(build)
}
