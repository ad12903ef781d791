//! Invertibles, stabilizers, generated subrings, the adjoint subring and upper
//! central series, orders, and faithful simples.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ring::FusionRing;

/// Default rank cap for exhaustive subring enumeration.
pub const SUBRING_RANK_CAP: usize = 12;

/// A set of basis indices. When produced by this module it is always a fusion
/// subring: it contains the unit and is closed under duals and products.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisSubset {
    members: Vec<bool>,
}

impl BasisSubset {
    pub fn from_indices(rank: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut members = vec![false; rank];
        for i in indices {
            members[i] = true;
        }
        BasisSubset { members }
    }

    pub fn full(rank: usize) -> Self {
        BasisSubset {
            members: vec![true; rank],
        }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::from_indices(rank, [0])
    }

    pub fn rank_of_ambient(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.get(i).copied().unwrap_or(false)
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn is_trivial(&self) -> bool {
        self.len() == 1 && self.contains(0)
    }

    pub fn is_subset_of(&self, other: &BasisSubset) -> bool {
        self.iter().all(|i| other.contains(i))
    }

    /// Renders the subset with ring labels, e.g. `{e, g^2}`.
    pub fn display<'a>(&'a self, ring: &'a FusionRing) -> impl fmt::Display + 'a {
        DisplaySubset { set: self, ring }
    }
}

struct DisplaySubset<'a> {
    set: &'a BasisSubset,
    ring: &'a FusionRing,
}

impl fmt::Display for DisplaySubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.set.iter().map(|i| self.ring.label(i)).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

/// The invertible basis elements and the group they form under `⊗`.
/// Group element `t` is basis element `indices[t]`; `indices[0]` is the unit.
#[derive(Debug, Clone)]
pub struct Invertibles {
    pub indices: Vec<usize>,
    pub group: GroupTable,
}

impl Invertibles {
    /// Group element for a basis index, if that index is invertible.
    pub fn element_of(&self, basis: usize) -> Option<usize> {
        self.indices.iter().position(|&i| i == basis)
    }
}

/// The upper central series `C ⊇ C_ad ⊇ (C_ad)_ad ⊇ …` until it stabilizes.
#[derive(Debug, Clone)]
pub struct CentralSeries {
    pub terms: Vec<BasisSubset>,
    pub nilpotency_class: Option<usize>,
}

impl CentralSeries {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }
}

impl FusionRing {
    /// True when `x_i ⊗ x_i* = 1`, i.e. the multiplication matrix is a
    /// permutation matrix.
    pub fn is_invertible(&self, i: usize) -> bool {
        let p = self.product(i, self.dual(i));
        p[0] == 1 && p[1..].iter().all(|&m| m == 0)
    }

    pub fn invertibles(&self) -> Result<Invertibles> {
        let indices: Vec<usize> = (0..self.rank()).filter(|&i| self.is_invertible(i)).collect();
        let pos: HashMap<usize, usize> = indices.iter().enumerate().map(|(t, &i)| (i, t)).collect();
        let mut mul = vec![vec![0; indices.len()]; indices.len()];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                let support: Vec<usize> = self.support(i, j).collect();
                let k = match support.as_slice() {
                    [k] if self.n(i, j, *k) == 1 => *k,
                    _ => {
                        return Err(Error::MalformedRing(format!(
                            "product of invertibles {i} and {j} is not a basis element"
                        )))
                    }
                };
                mul[a][b] = *pos.get(&k).ok_or_else(|| {
                    Error::MalformedRing(format!("product of invertibles {i} and {j} is not invertible"))
                })?;
            }
        }
        let labels = indices.iter().map(|&i| self.label(i).to_string()).collect();
        let group = GroupTable::from_table_with_labels(mul, labels)?;
        Ok(Invertibles { indices, group })
    }

    /// Indices of the pointed part `C_pt`.
    pub fn pointed_part(&self) -> BasisSubset {
        BasisSubset::from_indices(self.rank(), (0..self.rank()).filter(|&i| self.is_invertible(i)))
    }

    pub fn is_pointed(&self) -> bool {
        (0..self.rank()).all(|i| self.is_invertible(i))
    }

    /// `G[x_i]`: invertibles `g` with `m(g, x_i ⊗ x_i*) > 0`.
    pub fn stabilizer(&self, i: usize) -> BasisSubset {
        let d = self.dual(i);
        BasisSubset::from_indices(
            self.rank(),
            self.support(i, d).filter(|&g| self.is_invertible(g)),
        )
    }

    /// Least subring containing the unit, `seeds`, and their duals.
    pub fn generated_subring(&self, seeds: impl IntoIterator<Item = usize>) -> BasisSubset {
        let r = self.rank();
        let mut member = vec![false; r];
        let mut list = Vec::new();
        let push = |x: usize, member: &mut Vec<bool>, list: &mut Vec<usize>| {
            if !member[x] {
                member[x] = true;
                list.push(x);
            }
        };
        push(0, &mut member, &mut list);
        for s in seeds {
            push(s, &mut member, &mut list);
            push(self.dual(s), &mut member, &mut list);
        }
        // every pair (list[a], list[b]) with a, b < processed has been multiplied
        let mut processed = 0;
        while processed < list.len() {
            let x = list[processed];
            processed += 1;
            let mut b = 0;
            while b < processed {
                let y = list[b];
                for (i, j) in [(x, y), (y, x)] {
                    for k in 0..r {
                        if self.n(i, j, k) > 0 {
                            push(k, &mut member, &mut list);
                        }
                    }
                }
                b += 1;
            }
        }
        BasisSubset { members: member }
    }

    /// Adjoint subring of the subring `d`: generated by constituents of
    /// `x ⊗ x*` for `x ∈ d`.
    pub fn adjoint_of(&self, d: &BasisSubset) -> BasisSubset {
        let seeds: BTreeSet<usize> = d.iter().flat_map(|x| self.support(x, self.dual(x))).collect();
        self.generated_subring(seeds)
    }

    /// `C_ad`.
    pub fn adjoint_subring(&self) -> BasisSubset {
        self.adjoint_of(&BasisSubset::full(self.rank()))
    }

    pub fn upper_central_series(&self) -> CentralSeries {
        let mut terms = vec![BasisSubset::full(self.rank())];
        loop {
            let last = terms.last().expect("series is nonempty");
            if last.is_trivial() {
                let class = terms.len() - 1;
                return CentralSeries {
                    terms,
                    nilpotency_class: Some(class),
                };
            }
            let next = self.adjoint_of(last);
            if &next == last {
                return CentralSeries {
                    terms,
                    nilpotency_class: None,
                };
            }
            terms.push(next);
        }
    }

    /// `D^co`: generated by all `y` whose `y ⊗ y*` lies in `d`.
    pub fn commutator_subring(&self, d: &BasisSubset) -> BasisSubset {
        let seeds: Vec<usize> = (0..self.rank())
            .filter(|&y| self.support(y, self.dual(y)).all(|k| d.contains(k)))
            .collect();
        self.generated_subring(seeds)
    }

    /// Least `n ≥ 1` with `m(1, x_i^{⊗n}) > 0`, searched up to the rank.
    pub fn order_of(&self, i: usize) -> Result<usize> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        let r = self.rank();
        // support of x_i^{⊗n}
        let mut support = vec![false; r];
        support[i] = true;
        for n in 1..=r {
            if support[0] {
                return Ok(n);
            }
            let mut next = vec![false; r];
            for j in (0..r).filter(|&j| support[j]) {
                for k in self.support(i, j) {
                    next[k] = true;
                }
            }
            support = next;
        }
        Err(Error::MalformedRing(format!(
            "basis element {i} has no tensor power of degree ≤ {r} containing the unit"
        )))
    }

    pub fn orders(&self) -> Result<Vec<usize>> {
        (0..self.rank()).map(|i| self.order_of(i)).collect()
    }

    pub fn faithful_simples(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| self.generated_subring([i]).is_full())
            .collect()
    }

    /// Every fusion subring, sorted by size then by membership.
    ///
    /// The lattice is explored breadth-first from the trivial subring by adjoining
    /// one basis element at a time and closing; every subring is reachable this
    /// way, and closures are memoized by subring.
    pub fn all_subrings(&self, rank_cap: usize) -> Result<Vec<BasisSubset>> {
        if self.rank() > rank_cap {
            return Err(Error::RankCapExceeded {
                rank: self.rank(),
                cap: rank_cap,
            });
        }
        let start = BasisSubset::trivial(self.rank());
        let mut found: BTreeSet<BasisSubset> = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(d) = queue.pop_front() {
            for x in (0..self.rank()).filter(|&x| !d.contains(x)) {
                let next = self.generated_subring(d.iter().chain([x]));
                if found.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut all: Vec<BasisSubset> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
        Ok(all)
    }

    /// True when `d` contains the unit and is closed under duals and products.
    pub fn is_subring(&self, d: &BasisSubset) -> bool {
        d.rank_of_ambient() == self.rank()
            && d.contains(0)
            && d.iter().all(|i| {
                d.contains(self.dual(i)) && d.iter().all(|j| self.support(i, j).all(|k| d.contains(k)))
            })
    }

    /// The fusion ring on the basis elements of a subring, re-indexed in
    /// ascending order. Returns the ring and the embedding of its basis.
    pub fn restrict(&self, d: &BasisSubset) -> Result<(FusionRing, Vec<usize>)> {
        if !self.is_subring(d) {
            return Err(Error::MalformedRing("restriction to a non-subring".into()));
        }
        let embed = d.indices();
        let pos: HashMap<usize, usize> = embed.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let dual = embed.iter().map(|&i| pos[&self.dual(i)]).collect();
        let labels = embed.iter().map(|&i| self.label(i).to_string()).collect();
        let ring = FusionRing::from_fn(embed.len(), dual, labels, |a, b, c| {
            self.n(embed[a], embed[b], embed[c])
        })?;
        Ok((ring, embed))
    }
}
