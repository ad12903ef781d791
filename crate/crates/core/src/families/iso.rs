use crate::error::{Error, Result};
use crate::ring::FusionRing;

/// Default node cap for [`are_isomorphic`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Per-basis-element invariants preserved by every fusion-ring isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    /// FP dimension scaled by 1e6 and rounded.
    pub fpdim: i64,
    pub order: usize,
    pub self_dual: bool,
    /// Number of distinct constituents of `x ⊗ x*`.
    pub adjoint_terms: usize,
    /// `N_{xx}^x`.
    pub self_multiplicity: u32,
}

pub fn fingerprint(ring: &FusionRing) -> Result<Vec<Fingerprint>> {
    let dims = ring.fpdims()?;
    let orders = ring.orders()?;
    Ok((0..ring.rank())
        .map(|i| Fingerprint {
            fpdim: (dims[i] * 1e6).round() as i64,
            order: orders[i],
            self_dual: ring.dual(i) == i,
            adjoint_terms: ring.support(i, ring.dual(i)).count(),
            self_multiplicity: ring.n(i, i, i),
        })
        .collect())
}

/// A basis bijection `a → b` preserving unit, duals and all structure
/// constants, if one exists. `result[i]` is the image of `a`'s element `i`.
pub fn are_isomorphic(a: &FusionRing, b: &FusionRing) -> Result<Option<Vec<usize>>> {
    are_isomorphic_with_budget(a, b, DEFAULT_NODE_BUDGET)
}

pub fn are_isomorphic_with_budget(
    a: &FusionRing,
    b: &FusionRing,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if a.rank() != b.rank() {
        return Ok(None);
    }
    let fa = fingerprint(a)?;
    let fb = fingerprint(b)?;
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }

    // Assign the rarest fingerprints first; this prunes hardest early.
    let rank = a.rank();
    let mut order: Vec<usize> = (1..rank).collect();
    let class_size = |i: usize| fa.iter().filter(|f| **f == fa[i]).count();
    order.sort_by_key(|&i| (class_size(i), i));

    let mut search = Search {
        a,
        b,
        fa: &fa,
        fb: &fb,
        order,
        map: vec![usize::MAX; rank],
        used: vec![false; rank],
        assigned: Vec::with_capacity(rank),
        nodes: 0,
        budget,
    };
    search.map[0] = 0;
    search.used[0] = true;
    search.assigned.push(0);
    if search.extend(0)? {
        debug_assert!(is_isomorphism(a, b, &search.map));
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

struct Search<'a> {
    a: &'a FusionRing,
    b: &'a FusionRing,
    fa: &'a [Fingerprint],
    fb: &'a [Fingerprint],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(is_isomorphism(self.a, self.b, &self.map));
        }
        let i = self.order[depth];
        if self.map[i] != usize::MAX {
            // already placed as the dual of an earlier element
            return self.extend(depth + 1);
        }
        for j in 0..self.b.rank() {
            if self.used[j] || self.fa[i] != self.fb[j] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudget { budget: self.budget });
            }
            let (di, dj) = (self.a.dual(i), self.b.dual(j));
            let pair = di != i;
            if pair && (self.used[dj] || self.map[di] != usize::MAX) {
                continue;
            }
            self.place(i, j);
            if pair {
                self.place(di, dj);
            }
            if self.consistent(pair) && self.extend(depth + 1)? {
                return Ok(true);
            }
            if pair {
                self.unplace(di, dj);
            }
            self.unplace(i, j);
        }
        Ok(false)
    }

    fn place(&mut self, i: usize, j: usize) {
        self.map[i] = j;
        self.used[j] = true;
        self.assigned.push(i);
    }

    fn unplace(&mut self, i: usize, j: usize) {
        self.map[i] = usize::MAX;
        self.used[j] = false;
        self.assigned.pop();
    }

    /// Checks every structure constant among assigned elements that involves
    /// one of the newly placed ones.
    fn consistent(&self, pair: bool) -> bool {
        let fresh = if pair { 2 } else { 1 };
        let new = &self.assigned[self.assigned.len() - fresh..];
        let (a, b, m) = (self.a, self.b, &self.map);
        for &p in &self.assigned {
            for &q in &self.assigned {
                for &r in &self.assigned {
                    if !(new.contains(&p) || new.contains(&q) || new.contains(&r)) {
                        continue;
                    }
                    if a.n(p, q, r) != b.n(m[p], m[q], m[r]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn is_isomorphism(a: &FusionRing, b: &FusionRing, map: &[usize]) -> bool {
    let r = a.rank();
    map[0] == 0
        && (0..r).all(|i| b.dual(map[i]) == map[a.dual(i)])
        && (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| a.n(i, j, k) == b.n(map[i], map[j], map[k]))))
}
