//! Finite groups as explicit multiplication tables.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A finite group given by its Cayley table. The identity is always element 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub order: usize,
    pub is_cyclic: bool,
    pub exponent: usize,
    pub is_elementary_abelian_2: bool,
}

/// A homomorphism between two groups, stored as the image of every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub images: Vec<usize>,
    pub codomain_order: usize,
}

impl GroupHom {
    pub fn is_injective(&self) -> bool {
        let distinct: BTreeSet<_> = self.images.iter().collect();
        distinct.len() == self.images.len()
    }

    pub fn is_surjective(&self) -> bool {
        let distinct: BTreeSet<_> = self.images.iter().collect();
        distinct.len() == self.codomain_order
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&g| g == 0)
    }

    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<_> = self.images.iter().copied().collect();
        set.into_iter().collect()
    }
}

impl GroupTable {
    /// Validates a Cayley table. If the identity is not element 0 it is swapped
    /// into position 0 (the only relabeling performed).
    pub fn from_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_with_labels(mul, Vec::new())
    }

    pub fn from_table_with_labels(mul: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = mul.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if let Some(row) = mul.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!("row {row} has wrong length")));
        }
        if mul.iter().flatten().any(|&x| x >= n) {
            return Err(Error::InvalidGroup("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for (a, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        let mut labels = if labels.len() == n {
            labels
        } else {
            (0..n).map(|i| i.to_string()).collect()
        };
        let mut table = GroupTable {
            mul,
            inverse,
            labels: Vec::new(),
        };
        if identity != 0 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(0, identity);
            labels.swap(0, identity);
            table = table.relabeled(&perm);
        }
        table.labels = labels;
        Ok(table)
    }

    /// New element index `perm[old]`.
    fn relabeled(&self, perm: &[usize]) -> GroupTable {
        let n = self.order();
        let mut mul = vec![vec![0; n]; n];
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[perm[a]] = perm[self.inverse[a]];
            for b in 0..n {
                mul[perm[a]][perm[b]] = perm[self.mul[a][b]];
            }
        }
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            labels[perm[a]] = self.labels.get(a).cloned().unwrap_or_default();
        }
        GroupTable {
            mul,
            inverse,
            labels,
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group order must be positive");
        Self::abelian(&[n]).expect("cyclic group is valid")
    }

    /// `Z_{f1} × … × Z_{fr}`. Elements are mixed-radix tuples with the first
    /// factor most significant.
    pub fn abelian(factors: &[usize]) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidGroup("invariant factor 0".into()));
        }
        let order: usize = factors.iter().product();
        if order > 4096 {
            return Err(Error::InvalidGroup(format!("order {order} is too large")));
        }
        let factors: Vec<usize> = if factors.is_empty() { vec![1] } else { factors.to_vec() };
        let decode = |mut x: usize| -> Vec<usize> {
            let mut digits = vec![0; factors.len()];
            for (slot, &f) in digits.iter_mut().zip(&factors).rev() {
                *slot = x % f;
                x /= f;
            }
            digits
        };
        let encode = |digits: &[usize]| -> usize {
            digits.iter().zip(&factors).fold(0, |acc, (&d, &f)| acc * f + d)
        };
        let mut mul = vec![vec![0; order]; order];
        for a in 0..order {
            let da = decode(a);
            for b in 0..order {
                let db = decode(b);
                let sum: Vec<usize> = da
                    .iter()
                    .zip(&db)
                    .zip(&factors)
                    .map(|((x, y), f)| (x + y) % f)
                    .collect();
                mul[a][b] = encode(&sum);
            }
        }
        let nontrivial: Vec<usize> = factors.iter().copied().filter(|&f| f > 1).collect();
        let labels = (0..order)
            .map(|a| {
                if a == 0 {
                    "e".to_string()
                } else if nontrivial.len() <= 1 {
                    let k = a;
                    if k == 1 { "g".to_string() } else { format!("g^{k}") }
                } else {
                    let d = decode(a);
                    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        Self::from_table_with_labels(mul, labels)
    }

    /// The symmetric group on `n` letters, elements in lexicographic
    /// permutation order (identity first).
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        perms.sort();
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let order = perms.len();
        let mut mul = vec![vec![0; order]; order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                // (a·b)(x) = a(b(x))
                let composed: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
                mul[a][b] = index[&composed];
            }
        }
        let labels = perms
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == 0 {
                    "e".to_string()
                } else {
                    p.iter().map(|x| x.to_string()).collect::<String>()
                }
            })
            .collect();
        Self::from_table_with_labels(mul, labels).expect("symmetric group table is valid")
    }

    /// Dihedral group of order `2n`: rotations `r^k` then reflections `s r^k`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let order = 2 * n;
        let encode = |refl: usize, k: usize| refl * n + k % n;
        let mut mul = vec![vec![0; order]; order];
        for a in 0..order {
            let (sa, ka) = (a / n, a % n);
            for b in 0..order {
                let (sb, kb) = (b / n, b % n);
                // s^sa r^ka s^sb r^kb = s^(sa+sb) r^(±ka + kb)
                let k = if sb == 0 { ka + kb } else { n - ka + kb };
                mul[a][b] = encode((sa + sb) % 2, k);
            }
        }
        let labels = (0..order)
            .map(|a| match (a / n, a % n) {
                (0, 0) => "e".to_string(),
                (0, k) => format!("r^{k}"),
                (_, 0) => "s".to_string(),
                (_, k) => format!("sr^{k}"),
            })
            .collect();
        Self::from_table_with_labels(mul, labels).expect("dihedral group table is valid")
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion() -> Self {
        // unit u in {1,i,j,k} as 0..4, sign bit; element = sign * 4 + u
        const UNIT_MUL: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut mul = vec![vec![0; 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                let (sign, unit) = UNIT_MUL[a % 4][b % 4];
                mul[a][b] = ((a / 4 + b / 4 + sign) % 2) * 4 + unit;
            }
        }
        let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"];
        Self::from_table_with_labels(mul, names.iter().map(|s| s.to_string()).collect())
            .expect("quaternion table is valid")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul[x][a];
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, lcm)
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        (0..n).any(|a| self.element_order(a) == n)
    }

    pub fn profile(&self) -> GroupProfile {
        let exponent = self.exponent();
        GroupProfile {
            order: self.order(),
            is_cyclic: self.is_cyclic(),
            exponent,
            is_elementary_abelian_2: exponent <= 2,
        }
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<Vec<usize>> {
        if let Some(&g) = gens.iter().find(|&&g| g >= self.order()) {
            return Err(Error::InvalidSubgroup(format!("element {g} out of range")));
        }
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul[x][g];
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok((0..self.order()).filter(|&x| seen[x]).collect())
    }

    /// True when `elements` is closed under products and inverses and contains
    /// the identity.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &x in elements {
            if x >= self.order() {
                return false;
            }
            member[x] = true;
        }
        member[0]
            && elements.iter().all(|&a| {
                member[self.inverse[a]] && elements.iter().all(|&b| member[self.mul[a][b]])
            })
    }

    pub fn is_normal_subgroup(&self, elements: &[usize]) -> bool {
        if !self.is_subgroup(elements) {
            return false;
        }
        let member: BTreeSet<usize> = elements.iter().copied().collect();
        (0..self.order()).all(|g| {
            elements
                .iter()
                .all(|&h| member.contains(&self.mul[self.mul[g][h]][self.inverse[g]]))
        })
    }

    /// Table of the subgroup on `elements` (which must be a subgroup); the
    /// i-th element of the result corresponds to the i-th entry of the sorted
    /// input, with the identity moved to the front.
    pub fn subgroup_table(&self, elements: &[usize]) -> Result<(GroupTable, Vec<usize>)> {
        if !self.is_subgroup(elements) {
            return Err(Error::InvalidSubgroup(format!("{elements:?} is not a subgroup")));
        }
        let mut sorted: Vec<usize> = elements.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mul = sorted
            .iter()
            .map(|&a| sorted.iter().map(|&b| pos[&self.mul[a][b]]).collect())
            .collect();
        let labels = sorted.iter().map(|&a| self.labels[a].clone()).collect();
        Ok((GroupTable::from_table_with_labels(mul, labels)?, sorted))
    }

    /// Every subgroup, each as a sorted element list, ordered by size then
    /// lexicographically.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue = VecDeque::from([vec![0]]);
        found.insert(vec![0]);
        while let Some(h) = queue.pop_front() {
            for g in 0..self.order() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let next = self.subgroup_generated(&gens).expect("indices in range");
                if found.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut all: Vec<Vec<usize>> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// Number of elements of each order, as `(order, count)` sorted by order.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for a in 0..self.order() {
            *counts.entry(self.element_order(a)).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    /// Invariant factors `d1 | d2 | … ` (ascending, all > 1) of an abelian
    /// group, or `None` for a nonabelian one. The trivial group gives `[]`.
    pub fn abelian_invariants(&self) -> Option<Vec<usize>> {
        if !self.is_abelian() {
            return None;
        }
        let n = self.order();
        let mut primes = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                primes.push(p);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        // For each prime, the partition of exponents of the p-primary part.
        let mut primary: Vec<(usize, Vec<u32>)> = Vec::new();
        for &p in &primes {
            let mut s_prev = 0u32;
            let mut at_least: Vec<u32> = Vec::new();
            let mut k = 1u32;
            loop {
                let pk = p.pow(k);
                let count = (0..n).filter(|&a| pk % self.element_order(a) == 0).count();
                let s = ilog(count, p);
                if s == s_prev {
                    break;
                }
                at_least.push(s - s_prev);
                s_prev = s;
                k += 1;
            }
            // at_least[k-1] = number of cyclic factors of exponent ≥ k
            let parts_count = at_least.first().copied().unwrap_or(0) as usize;
            let mut parts = vec![0u32; parts_count];
            for &c in &at_least {
                for part in parts.iter_mut().take(c as usize) {
                    *part += 1;
                }
            }
            primary.push((p, parts));
        }
        let len = primary.iter().map(|(_, parts)| parts.len()).max().unwrap_or(0);
        let mut factors = vec![1usize; len];
        for (p, parts) in &primary {
            for (slot, &e) in factors.iter_mut().zip(parts.iter()) {
                *slot *= p.pow(e);
            }
        }
        factors.reverse();
        Some(factors)
    }

    /// Short description such as `Z4`, `Z2 × Z2`, `1`, or `nonabelian group of order 6`.
    pub fn structure_name(&self) -> String {
        match self.abelian_invariants() {
            Some(f) if f.is_empty() => "1".to_string(),
            Some(f) => f.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join(" × "),
            None => format!("nonabelian group of order {}", self.order()),
        }
    }

    /// Decides abstract isomorphism. Abelian groups are compared by order
    /// statistics; otherwise a backtracking search over images of a generating
    /// set is run.
    pub fn is_isomorphic(&self, other: &GroupTable) -> bool {
        if self.order() != other.order() || self.order_statistics() != other.order_statistics() {
            return false;
        }
        match (self.is_abelian(), other.is_abelian()) {
            (true, true) => return true,
            (false, false) => {}
            _ => return false,
        }
        let gens = self.generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                (0..other.order())
                    .filter(|&h| other.element_order(h) == self.element_order(g))
                    .collect()
            })
            .collect();
        let mut choice = vec![0; gens.len()];
        self.try_extend(other, &gens, &candidates, &mut choice, 0)
    }

    fn try_extend(
        &self,
        other: &GroupTable,
        gens: &[usize],
        candidates: &[Vec<usize>],
        choice: &mut Vec<usize>,
        depth: usize,
    ) -> bool {
        if depth == gens.len() {
            return self.extend_hom(other, gens, choice).is_some_and(|h| h.is_injective());
        }
        for &c in &candidates[depth] {
            choice[depth] = c;
            if self.try_extend(other, gens, candidates, choice, depth + 1) {
                return true;
            }
        }
        false
    }

    /// Extends generator images to a homomorphism, if consistent.
    pub fn extend_hom(&self, other: &GroupTable, gens: &[usize], images: &[usize]) -> Option<GroupHom> {
        let mut map: Vec<Option<usize>> = vec![None; self.order()];
        map[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x].unwrap();
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.mul[x][g];
                let fy = other.mul[fx][h];
                match map[y] {
                    None => {
                        map[y] = Some(fy);
                        queue.push_back(y);
                    }
                    Some(existing) if existing != fy => return None,
                    Some(_) => {}
                }
            }
        }
        let images: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                if images[self.mul[a][b]] != other.mul[images[a]][images[b]] {
                    return None;
                }
            }
        }
        Some(GroupHom {
            images,
            codomain_order: other.order(),
        })
    }

    /// A small generating set, built greedily by lowest index.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![0];
        for g in 0..self.order() {
            if current.len() == self.order() {
                break;
            }
            if current.binary_search(&g).is_err() {
                gens.push(g);
                current = self.subgroup_generated(&gens).expect("in range");
            }
        }
        gens
    }

    /// True when the elements `gens` generate the whole group.
    pub fn generates(&self, gens: &[usize]) -> bool {
        self.subgroup_generated(gens).map(|s| s.len() == self.order()).unwrap_or(false)
    }

    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let (n, m) = (self.order(), other.order());
        let mut mul = vec![vec![0; n * m]; n * m];
        for a in 0..n * m {
            for b in 0..n * m {
                mul[a][b] = self.mul[a / m][b / m] * m + other.mul[a % m][b % m];
            }
        }
        let labels = (0..n * m)
            .map(|a| format!("{}⊠{}", self.labels[a / m], other.labels[a % m]))
            .collect();
        GroupTable::from_table_with_labels(mul, labels).expect("product of groups is a group")
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.structure_name())
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

fn is_power_of(mut x: usize, p: usize) -> bool {
    while x % p == 0 {
        x /= p;
    }
    x == 1
}

fn ilog(mut x: usize, p: usize) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p;
        k += 1;
    }
    k
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 { 0 } else { a / gcd(a, b) * b }
}

/// The prime `p` if `n = p^k` with `k ≥ 1`.
pub fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    is_power_of(n, p).then_some(p)
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
