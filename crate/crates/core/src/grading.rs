//! Gradings of fusion rings by finite groups, and the universal grading.
//!
//! The universal grading group `U(C)` is built from the components of the
//! adjoint-orbit graph: `x_i` and `x_k` are joined whenever `x_k` occurs in
//! `a ⊗ x_i` for some `a` in the adjoint subring. Components multiply by taking
//! the component of any constituent of a product of representatives; that this
//! is independent of the representatives is checked, not assumed, because file
//! inputs need not be categorifiable.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::group::{GroupHom, GroupTable};
use crate::ring::{FusionRing, EPS};
use crate::structure::BasisSubset;

/// An assignment of a group element to every basis element.
#[derive(Debug, Clone)]
pub struct GradingMap {
    pub group: GroupTable,
    pub assign: Vec<usize>,
}

impl GradingMap {
    /// The grading of every basis element by the trivial group.
    pub fn trivial(rank: usize) -> Self {
        GradingMap {
            group: GroupTable::trivial(),
            assign: vec![0; rank],
        }
    }
}

/// `C = ⊕_{g ∈ U(C)} C_g` with `C_e = C_ad`.
///
/// Group element `g` is labeled by the smallest basis index in its component;
/// components are ordered by that index, so the identity component comes first.
#[derive(Debug, Clone)]
pub struct UniversalGrading {
    pub grading: GradingMap,
    pub components: Vec<BasisSubset>,
}

impl UniversalGrading {
    pub fn group(&self) -> &GroupTable {
        &self.grading.group
    }

    pub fn degree(&self, i: usize) -> usize {
        self.grading.assign[i]
    }

    pub fn order(&self) -> usize {
        self.components.len()
    }
}

/// A subgroup of `U(C)` together with its own table.
#[derive(Debug, Clone)]
pub struct Subgroup {
    /// Elements as indices into `U(C)`, ascending.
    pub elements: Vec<usize>,
    pub table: GroupTable,
}

impl FusionRing {
    pub fn universal_grading(&self) -> Result<UniversalGrading> {
        let r = self.rank();
        let ad = self.adjoint_subring();

        let mut component = vec![usize::MAX; r];
        let mut count = 0;
        for start in 0..r {
            if component[start] != usize::MAX {
                continue;
            }
            component[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                // k ~ i when m(x_k, a ⊗ x_i) > 0, a ∈ C_ad; edges are taken both ways.
                for a in ad.iter() {
                    for k in self.support(a, i).chain(self.support(self.dual(a), i)) {
                        if component[k] == usize::MAX {
                            component[k] = count;
                            queue.push_back(k);
                        }
                    }
                }
            }
            count += 1;
        }

        let mut mul = vec![vec![usize::MAX; count]; count];
        for i in 0..r {
            for j in 0..r {
                let (a, b) = (component[i], component[j]);
                for k in self.support(i, j) {
                    let c = component[k];
                    if mul[a][b] == usize::MAX {
                        mul[a][b] = c;
                    } else if mul[a][b] != c {
                        return Err(Error::InconsistentGrading(format!(
                            "products of components {a} and {b} land in components {} and {c}",
                            mul[a][b]
                        )));
                    }
                }
            }
        }
        let labels: Vec<String> = (0..count)
            .map(|c| {
                let first = component.iter().position(|&x| x == c).expect("component is nonempty");
                self.label(first).to_string()
            })
            .collect();
        let group = GroupTable::from_table_with_labels(mul, labels)
            .map_err(|e| Error::InconsistentGrading(format!("component product: {e}")))?;
        if component[0] != 0 {
            return Err(Error::InconsistentGrading("unit outside the first component".into()));
        }
        for i in 0..r {
            if component[self.dual(i)] != group.inverse(component[i]) {
                return Err(Error::InconsistentGrading(format!(
                    "dual of basis element {i} is not graded by the inverse"
                )));
            }
        }
        let components = (0..count)
            .map(|c| BasisSubset::from_indices(r, (0..r).filter(|&i| component[i] == c)))
            .collect::<Vec<_>>();
        if components[0] != ad {
            return Err(Error::InconsistentGrading(
                "identity component differs from the adjoint subring".into(),
            ));
        }
        Ok(UniversalGrading {
            grading: GradingMap {
                group,
                assign: component,
            },
            components,
        })
    }

    /// True when `λ` respects the unit, duals, and every nonzero structure
    /// constant.
    pub fn verify_grading(&self, grading: &GradingMap) -> bool {
        let g = &grading.group;
        let lambda = &grading.assign;
        if lambda.len() != self.rank() || lambda.iter().any(|&x| x >= g.order()) {
            return false;
        }
        if lambda[0] != g.identity() {
            return false;
        }
        (0..self.rank()).all(|i| {
            lambda[self.dual(i)] == g.inverse(lambda[i])
                && (0..self.rank()).all(|j| {
                    let gij = g.mul(lambda[i], lambda[j]);
                    self.support(i, j).all(|k| lambda[k] == gij)
                })
        })
    }

    /// The unique homomorphism `φ: U(C) → G` with `λ = φ ∘ λ_C`.
    pub fn factor_through_universal(&self, grading: &GradingMap) -> Result<GroupHom> {
        if !self.verify_grading(grading) {
            return Err(Error::FactorizationFailure("input is not a grading".into()));
        }
        let universal = self.universal_grading()?;
        let mut images = vec![usize::MAX; universal.order()];
        for i in 0..self.rank() {
            let u = universal.degree(i);
            let target = grading.assign[i];
            if images[u] == usize::MAX {
                images[u] = target;
            } else if images[u] != target {
                return Err(Error::FactorizationFailure(format!(
                    "component {u} maps to both {} and {target}",
                    images[u]
                )));
            }
        }
        let u = universal.group();
        for a in 0..u.order() {
            for b in 0..u.order() {
                if images[u.mul(a, b)] != grading.group.mul(images[a], images[b]) {
                    return Err(Error::FactorizationFailure(format!(
                        "not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(GroupHom {
            images,
            codomain_order: grading.group.order(),
        })
    }

    /// `U_D(C) = {g ∈ U(C) | D ∩ C_g ≠ 0}`.
    pub fn restrict_grading(&self, d: &BasisSubset) -> Result<Subgroup> {
        let universal = self.universal_grading()?;
        let elements: BTreeSet<usize> = d.iter().map(|i| universal.degree(i)).collect();
        let elements: Vec<usize> = elements.into_iter().collect();
        let (table, _) = universal.group().subgroup_table(&elements)?;
        Ok(Subgroup { elements, table })
    }

    /// `φ_D: U(D) → U(C)` induced by the inclusion of the subring `d`.
    /// Its image is `U_D(C)`.
    pub fn inclusion_homomorphism(&self, d: &BasisSubset) -> Result<GroupHom> {
        let universal = self.universal_grading()?;
        let (sub, embed) = self.restrict(d)?;
        let induced = GradingMap {
            group: universal.group().clone(),
            assign: embed.iter().map(|&i| universal.degree(i)).collect(),
        };
        sub.factor_through_universal(&induced)
    }

    /// Checks the invariants of a universal grading: faithful, identity
    /// component equal to `C_ad`, and all components of equal FP dimension with
    /// `|U|·FPdim C_e = FPdim C`.
    pub fn check_universal_grading(&self, u: &UniversalGrading) -> Result<bool> {
        if !self.verify_grading(&u.grading) || u.components.iter().any(BasisSubset::is_empty) {
            return Ok(false);
        }
        if u.components[0] != self.adjoint_subring() {
            return Ok(false);
        }
        let dims = self.fpdims()?;
        let comp_dim =
            |c: &BasisSubset| -> f64 { c.iter().map(|i| dims[i] * dims[i]).sum::<f64>() };
        let base = comp_dim(&u.components[0]);
        let total: f64 = dims.iter().map(|d| d * d).sum();
        let equal = u.components.iter().all(|c| (comp_dim(c) - base).abs() < 10.0 * EPS * total.max(1.0));
        let product = (u.order() as f64 * base - total).abs() < 10.0 * EPS * total.max(1.0);
        Ok(equal && product)
    }
}
