//! Executable theorem checks, the generalized Tambara-Yamagami classifier, and
//! the modularization predictor for braided Tambara-Yamagami data.
//!
//! Hypotheses that involve a braiding or modularity cannot be read off fusion
//! rules. Those checks are gated on ring-level shadows instead: commutativity
//! for "braided", and `G(C) ≅ U(C)` for "modular".

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{are_isomorphic, deligne_product, gen_ising, gen_pointed};
use crate::group::{is_prime, lcm, prime_power_base, GroupTable};
use crate::ring::{is_integral, FusionRing, EPS, INTEGRALITY_TOL};
use crate::structure::{BasisSubset, SUBRING_RANK_CAP};

/// Outcome of one theorem check on one ring.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypotheses_met: bool,
    /// `None` when the hypotheses do not hold.
    pub conclusion_holds: Option<bool>,
    pub detail: String,
    /// Basis indices witnessing a failure.
    pub counterexample: Option<Vec<usize>>,
}

impl CheckResult {
    fn skipped(id: &'static str, statement: &'static str, why: impl Into<String>) -> Self {
        CheckResult {
            id,
            statement,
            hypotheses_met: false,
            conclusion_holds: None,
            detail: why.into(),
            counterexample: None,
        }
    }

    fn evaluated(
        id: &'static str,
        statement: &'static str,
        counterexample: Option<Vec<usize>>,
        detail: impl Into<String>,
    ) -> Self {
        CheckResult {
            id,
            statement,
            hypotheses_met: true,
            conclusion_holds: Some(counterexample.is_none()),
            detail: detail.into(),
            counterexample,
        }
    }

    pub fn failed(&self) -> bool {
        self.conclusion_holds == Some(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub checks: Vec<CheckResult>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(CheckResult::failed)
    }

    pub fn evaluated(&self) -> usize {
        self.checks.iter().filter(|c| c.hypotheses_met).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Simples added one at a time, each time taking the one that most enlarges
/// the generated subring (lowest index on ties), until the ring is generated.
pub fn greedy_generating_set(ring: &FusionRing) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = ring.generated_subring([]);
    while !current.is_full() {
        let (best, next) = (0..ring.rank())
            .filter(|&x| !current.contains(x))
            .map(|x| (x, ring.generated_subring(current.iter().chain([x]))))
            .max_by(|(x, a), (y, b)| a.len().cmp(&b.len()).then(y.cmp(x)))
            .expect("a proper subring misses some basis element");
        gens.push(best);
        current = next;
    }
    gens
}

/// Runs every theorem check against `ring`.
pub fn run_theorem_suite(ring: &FusionRing) -> Result<TheoremReport> {
    let r = ring.rank();
    let universal = ring.universal_grading()?;
    let u = universal.group();
    let orders = ring.orders()?;
    let faithful = ring.faithful_simples();
    let series = ring.upper_central_series();
    let commutative = ring.is_commutative();
    let fpdim = ring.fpdim_ring()?;
    let mut checks = Vec::new();

    // (a) faithful simples and cyclicity of U(C)
    const A1: &str = "a faithful simple X forces U(C) cyclic with |U(C)| dividing ord(X)";
    if faithful.is_empty() {
        checks.push(CheckResult::skipped("a1", A1, "no faithful simple"));
    } else {
        let bad = faithful
            .iter()
            .find(|&&x| !u.is_cyclic() || orders[x] % u.order() != 0)
            .map(|&x| vec![x]);
        checks.push(CheckResult::evaluated(
            "a1",
            A1,
            bad,
            format!("U(C) ≅ {}, faithful simples {:?}", u.structure_name(), faithful),
        ));
    }
    const A2: &str = "the degree of every simple X has order dividing ord(X)";
    let bad = (0..r)
        .find(|&i| orders[i] % u.element_order(universal.degree(i)) != 0)
        .map(|i| vec![i]);
    checks.push(CheckResult::evaluated("a2", A2, bad, format!("orders {orders:?}")));
    const A3: &str = "degrees of a generating set of simples generate U(C)";
    let gens = greedy_generating_set(ring);
    let degrees: Vec<usize> = gens.iter().map(|&i| universal.degree(i)).collect();
    checks.push(CheckResult::evaluated(
        "a3",
        A3,
        (!u.generates(&degrees)).then(|| gens.clone()),
        format!("generators {gens:?}"),
    ));

    // (b) exponent of U(C)
    let order_lcm = orders.iter().fold(1, |acc, &o| lcm(acc, o));
    const B1: &str = "exponent of U(C) divides the lcm of simple orders";
    checks.push(CheckResult::evaluated(
        "b1",
        B1,
        (order_lcm % u.exponent() != 0).then(Vec::new),
        format!("exponent {} divides {order_lcm}", u.exponent()),
    ));
    const B2: &str = "all simples self-dual forces U(C) elementary abelian 2";
    if (0..r).all(|i| ring.dual(i) == i) {
        checks.push(CheckResult::evaluated(
            "b2",
            B2,
            (u.exponent() > 2 || !u.is_abelian()).then(Vec::new),
            format!("U(C) ≅ {}", u.structure_name()),
        ));
    } else {
        checks.push(CheckResult::skipped("b2", B2, "some simple is not self-dual"));
    }

    // (c) divisibility of FPdim C by simple orders
    let nilpotent = series.is_nilpotent();
    const C1: &str = "nilpotent with a simple of prime order p forces p | FPdim C";
    let prime_orders: Vec<(usize, usize)> = (0..r)
        .filter(|&i| is_prime(orders[i]))
        .map(|i| (i, orders[i]))
        .collect();
    if nilpotent && !prime_orders.is_empty() {
        let rounded = fpdim.round() as usize;
        let bad = prime_orders
            .iter()
            .find(|&&(_, p)| !is_integral(fpdim) || rounded % p != 0)
            .map(|&(i, _)| vec![i]);
        let mut ps: Vec<usize> = prime_orders.iter().map(|&(_, p)| p).collect();
        ps.sort_unstable();
        ps.dedup();
        let shown: Vec<String> = ps.iter().map(|p| format!("p = {p}")).collect();
        checks.push(CheckResult::evaluated(
            "c1",
            C1,
            bad,
            format!("{} dividing {rounded}", shown.join(", ")),
        ));
    } else {
        checks.push(CheckResult::skipped("c1", C1, "not nilpotent or no simple of prime order"));
    }
    const C2: &str = "nilpotent with all simple orders powers of p forces FPdim C = p^m";
    let top = orders.iter().copied().max().unwrap_or(1);
    let base = prime_power_base(top).filter(|&p| {
        orders
            .iter()
            .all(|&o| o == 1 || prime_power_base(o) == Some(p))
    });
    match base {
        Some(p) if nilpotent => {
            let mut power = p as f64;
            while power < fpdim - INTEGRALITY_TOL {
                power *= p as f64;
            }
            let ok = (power - fpdim).abs() < INTEGRALITY_TOL;
            checks.push(CheckResult::evaluated(
                "c2",
                C2,
                (!ok).then(Vec::new),
                format!("p = {p}, FPdim C = {fpdim:.6}"),
            ));
        }
        _ => checks.push(CheckResult::skipped("c2", C2, "not nilpotent or orders not p-powers")),
    }

    // (d) rank-one components of order 2 at class ≤ 2
    const D: &str = "class ≤ 2, g of order 2 with C_g of rank 1: its simple has order 2";
    let candidates: Vec<usize> = universal
        .components
        .iter()
        .enumerate()
        .filter(|(g, c)| u.element_order(*g) == 2 && c.len() == 1)
        .map(|(_, c)| c.indices()[0])
        .collect();
    match series.nilpotency_class {
        Some(class) if class <= 2 && !candidates.is_empty() => {
            let bad = candidates.iter().find(|&&x| orders[x] != 2).map(|&x| vec![x]);
            checks.push(CheckResult::evaluated("d", D, bad, format!("simples {candidates:?}")));
        }
        _ => checks.push(CheckResult::skipped("d", D, "class > 2 or no rank-1 component of order 2")),
    }

    // (e) exponent bound from generators
    const E: &str = "commutative: exponent of U(C) divides lcm of generator orders";
    if commutative {
        let gen_lcm = gens.iter().fold(1, |acc, &g| lcm(acc, orders[g]));
        checks.push(CheckResult::evaluated(
            "e",
            E,
            (gen_lcm % u.exponent() != 0).then(|| gens.clone()),
            format!("generators {gens:?}, lcm {gen_lcm}"),
        ));
    } else {
        checks.push(CheckResult::skipped("e", E, "not commutative"));
    }

    // (f) subrings meeting every component
    const F: &str = "commutative nilpotent: a subring meeting every component is everything";
    if commutative && nilpotent && r <= SUBRING_RANK_CAP {
        let subrings = ring.all_subrings(SUBRING_RANK_CAP)?;
        let bad = subrings
            .iter()
            .find(|d| {
                !d.is_full()
                    && universal
                        .components
                        .iter()
                        .all(|c| c.iter().any(|i| d.contains(i)))
            })
            .map(BasisSubset::indices);
        checks.push(CheckResult::evaluated(
            "f",
            F,
            bad,
            format!("{} subrings examined", subrings.len()),
        ));
    } else if r > SUBRING_RANK_CAP {
        checks.push(CheckResult::skipped("f", F, format!("rank {r} above {SUBRING_RANK_CAP}")));
    } else {
        checks.push(CheckResult::skipped("f", F, "not commutative and nilpotent"));
    }

    // (g) existence of a faithful simple
    const G: &str = "commutative nilpotent with U(C) cyclic has a faithful simple";
    if commutative && nilpotent && u.is_cyclic() {
        checks.push(CheckResult::evaluated(
            "g",
            G,
            faithful.is_empty().then(Vec::new),
            format!("faithful simples {faithful:?}"),
        ));
    } else {
        checks.push(CheckResult::skipped("g", G, "not commutative, nilpotent, with cyclic U(C)"));
    }

    Ok(TheoremReport { checks })
}

/// Invariants of a ring with generalized Tambara-Yamagami fusion rules of
/// type `(G, Γ)`.
#[derive(Debug, Clone)]
pub struct GenTyProfile {
    /// `G(C)`; element `t` is basis element `invertible_basis[t]`.
    pub group: GroupTable,
    pub invertible_basis: Vec<usize>,
    /// `Γ` as elements of `group`, ascending.
    pub gamma: Vec<usize>,
    /// Non-invertible simples, ascending.
    pub non_invertibles: Vec<usize>,
    /// `|U(C)|`.
    pub universal_order: usize,
    /// `λ(G)` as elements of `U(C)`, ascending.
    pub lambda_image: Vec<usize>,
    /// Some non-invertible simple is self-dual.
    pub has_order_two_non_invertible: bool,
}

impl GenTyProfile {
    pub fn g_order(&self) -> usize {
        self.group.order()
    }

    pub fn gamma_order(&self) -> usize {
        self.gamma.len()
    }

    pub fn index(&self) -> usize {
        self.g_order() / self.gamma_order()
    }

    pub fn gamma_table(&self) -> GroupTable {
        self.group.subgroup_table(&self.gamma).expect("Γ is a subgroup").0
    }

    /// E.g. `(Z4, Z2)`.
    pub fn type_name(&self) -> String {
        format!("({}, {})", self.group.structure_name(), self.gamma_table().structure_name())
    }
}

/// Recognizes generalized Tambara-Yamagami fusion rules and checks the
/// structural consequences: a single normal stabilizer, transitive actions,
/// and the shape of the universal grading.
///
/// Returns `None` for pointed rings and for rings where some product of two
/// non-invertible simples has a non-invertible constituent. A ring that
/// passes that test but violates one of the consequences yields
/// [`Error::GenTyInconsistent`].
pub fn classify_gen_ty(ring: &FusionRing) -> Result<Option<GenTyProfile>> {
    if ring.is_pointed() {
        return Ok(None);
    }
    let inv = ring.invertibles()?;
    let non_inv: Vec<usize> = (0..ring.rank()).filter(|&i| !ring.is_invertible(i)).collect();
    for &x in &non_inv {
        for &y in &non_inv {
            if ring.support(x, y).any(|k| !ring.is_invertible(k)) {
                return Ok(None);
            }
        }
    }
    let fail = |msg: String| Err(Error::GenTyInconsistent(msg));
    let g = &inv.group;
    let elem = |basis: usize| inv.element_of(basis).expect("invertible");

    // one stabilizer for all non-invertibles, normal in G
    let x0 = non_inv[0];
    let stab = ring.stabilizer(x0);
    for &x in &non_inv {
        if ring.stabilizer(x) != stab {
            return fail(format!("stabilizers of {x0} and {x} differ"));
        }
    }
    let mut gamma: Vec<usize> = stab.iter().map(elem).collect();
    gamma.sort_unstable();
    if !g.is_normal_subgroup(&gamma) {
        return fail("stabilizer is not a normal subgroup".into());
    }

    // transitive left and right actions
    for (side, orbit) in [
        ("left", (0..g.order()).flat_map(|t| ring.support(inv.indices[t], x0)).collect::<Vec<_>>()),
        ("right", (0..g.order()).flat_map(|t| ring.support(x0, inv.indices[t])).collect()),
    ] {
        let orbit = BasisSubset::from_indices(ring.rank(), orbit);
        if orbit.indices() != non_inv {
            return fail(format!("{side} action of G on non-invertibles is not transitive"));
        }
    }

    // rank and dimension identities
    let (n, m) = (g.order(), gamma.len());
    if ring.rank() != (n / m) * (1 + m) {
        return fail(format!("rank {} is not [G:Γ](1+|Γ|) = {}", ring.rank(), (n / m) * (1 + m)));
    }
    let fpdim = ring.fpdim_ring()?;
    let target = 2.0 * n as f64;
    if (fpdim - target).abs() > 10.0 * EPS * target {
        return fail(format!("FPdim {fpdim} is not 2|G| = {target}"));
    }

    // C_ad = C[Γ], |U| = 2[G:Γ], ker λ = Γ, component ranks and dimensions
    let gamma_basis: Vec<usize> = gamma.iter().map(|&t| inv.indices[t]).collect();
    if ring.adjoint_subring() != ring.generated_subring(gamma_basis.iter().copied()) {
        return fail("C_ad differs from C[Γ]".into());
    }
    let universal = ring.universal_grading()?;
    let u = universal.group();
    if u.order() != 2 * (n / m) {
        return fail(format!("|U(C)| = {} is not 2[G:Γ] = {}", u.order(), 2 * (n / m)));
    }
    let lambda: Vec<usize> = inv.indices.iter().map(|&b| universal.degree(b)).collect();
    let kernel: Vec<usize> = (0..n).filter(|&t| lambda[t] == u.identity()).collect();
    if kernel != gamma {
        return fail("kernel of λ on G is not Γ".into());
    }
    let mut image = lambda.clone();
    image.sort_unstable();
    image.dedup();
    if 2 * image.len() != u.order() {
        return fail("λ(G) does not have index 2 in U(C)".into());
    }
    let dims = ring.fpdims()?;
    for (h, comp) in universal.components.iter().enumerate() {
        let in_image = image.binary_search(&h).is_ok();
        let expected_rank = if in_image { m } else { 1 };
        if comp.len() != expected_rank || comp.iter().any(|i| ring.is_invertible(i) != in_image) {
            return fail(format!("component {h} has rank {} (expected {expected_rank})", comp.len()));
        }
        let d: f64 = comp.iter().map(|i| dims[i] * dims[i]).sum();
        if (d - m as f64).abs() > 10.0 * EPS * target {
            return fail(format!("component {h} has FPdim {d}, not |Γ| = {m}"));
        }
    }

    let has_order_two = non_inv.iter().any(|&x| ring.dual(x) == x);
    if (n / m) % 2 == 1 && !has_order_two {
        return fail("odd index but no non-invertible simple of order 2".into());
    }

    Ok(Some(GenTyProfile {
        group: g.clone(),
        invertible_basis: inv.indices.clone(),
        gamma,
        non_invertibles: non_inv,
        universal_order: u.order(),
        lambda_image: image,
        has_order_two_non_invertible: has_order_two,
    }))
}

/// Result of trying to write a generalized TY ring as `Ising ⊠ pointed`.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub hypotheses_met: bool,
    /// `Some(true)` when a decomposition was found.
    pub decomposes: Option<bool>,
    pub detail: String,
    /// The pointed factors tried, by structure name.
    pub tried: Vec<String>,
    /// Basis bijection from the ring to `Ising ⊠ B` on success.
    pub witness: Option<Vec<usize>>,
}

/// Looks for `R ≅ Ising ⊠ Z[B]` over subgroups `B ≤ G` with `|B| = |G|/2`,
/// when `R` is generalized TY with `|Γ| = 2` and `G(R) ≅ U(R)`.
pub fn check_modular_genty_decomposition(ring: &FusionRing) -> Result<DecompositionReport> {
    let skipped = |detail: String| DecompositionReport {
        hypotheses_met: false,
        decomposes: None,
        detail,
        tried: Vec::new(),
        witness: None,
    };
    let Some(profile) = classify_gen_ty(ring)? else {
        return Ok(skipped("not generalized Tambara-Yamagami".into()));
    };
    if profile.gamma_order() != 2 {
        return Ok(skipped(format!("|Γ| = {}, not 2", profile.gamma_order())));
    }
    let u = ring.universal_grading()?;
    if !profile.group.is_isomorphic(u.group()) {
        return Ok(skipped(format!(
            "G(C) ≅ {} but U(C) ≅ {}",
            profile.group.structure_name(),
            u.group().structure_name()
        )));
    }
    let g = &profile.group;
    let mut classes: Vec<GroupTable> = Vec::new();
    for sub in g.all_subgroups().into_iter().filter(|s| 2 * s.len() == g.order()) {
        let table = g.subgroup_table(&sub)?.0;
        if !classes.iter().any(|c| c.is_isomorphic(&table)) {
            classes.push(table);
        }
    }
    let ising = gen_ising();
    let mut tried = Vec::new();
    for b in &classes {
        let name = format!("Ising ⊠ {}", b.structure_name());
        tried.push(b.structure_name());
        let candidate = deligne_product(&ising, &gen_pointed(b));
        if let Some(map) = are_isomorphic(ring, &candidate)? {
            return Ok(DecompositionReport {
                hypotheses_met: true,
                decomposes: Some(true),
                detail: name,
                tried,
                witness: Some(map),
            });
        }
    }
    Ok(DecompositionReport {
        hypotheses_met: true,
        decomposes: Some(false),
        detail: format!("no Ising ⊠ B with |B| = {} matches", g.order() / 2),
        tried,
        witness: None,
    })
}

/// Bicharacter data for a braided Tambara-Yamagami ring over `G = (Z2)^m`:
/// `χ(g, h) = (-1)^{gᵀBh}` with `B` symmetric and invertible over `F2`.
/// Row `i` of `B` is the bitmask `rows[i]` (bit `j` is entry `(i, j)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TyBraidData {
    m: usize,
    rows: Vec<u64>,
}

impl TyBraidData {
    pub const MAX_RANK: usize = 63;

    pub fn new(m: usize, rows: Vec<u64>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidBicharacter(msg));
        if m == 0 || m > Self::MAX_RANK {
            return bad(format!("rank must be between 1 and {}", Self::MAX_RANK));
        }
        if rows.len() != m {
            return bad(format!("expected {m} rows, got {}", rows.len()));
        }
        if let Some(i) = rows.iter().position(|&r| r >> m != 0) {
            return bad(format!("row {i} has entries beyond column {m}"));
        }
        for i in 0..m {
            for j in 0..i {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return bad(format!("not symmetric at ({i}, {j})"));
                }
            }
        }
        if f2_rank(&rows) != m {
            return bad("degenerate: not invertible over F2".into());
        }
        Ok(TyBraidData { m, rows })
    }

    pub fn identity(m: usize) -> Result<Self> {
        Self::new(m, (0..m).map(|i| 1 << i).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// `diag(B)` as a bitmask; `χ(g, g) = (-1)^{g · diag}`.
    pub fn diagonal(&self) -> u64 {
        (0..self.m).fold(0, |acc, i| acc | (self.rows[i] & (1 << i)))
    }

    /// `χ(g, h)` as an exponent of `-1`.
    pub fn pairing(&self, g: u64, h: u64) -> u32 {
        (0..self.m)
            .filter(|&i| (g >> i) & 1 == 1)
            .map(|i| (self.rows[i] & h).count_ones())
            .sum::<u32>()
            % 2
    }

    /// Applies a permutation of the basis of `G`: `perm[i]` is the new
    /// position of basis vector `i`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut rows = vec![0u64; self.m];
        for i in 0..self.m {
            for j in 0..self.m {
                if (self.rows[i] >> j) & 1 == 1 {
                    rows[perm[i]] |= 1 << perm[j];
                }
            }
        }
        Self::new(self.m, rows)
    }
}

fn f2_rank(rows: &[u64]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for bit in 0..64 {
        let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && (rows[r] >> bit) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// `T = {g : χ(g, g) = 1}`, the kernel of `g ↦ g · diag(B)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transparent {
    /// A basis of `T` as bitmasks.
    pub basis: Vec<u64>,
    /// `[G : T]`, either 1 or 2.
    pub index: usize,
}

impl Transparent {
    /// All elements of `T`; only sensible for small `m`.
    pub fn elements(&self) -> Vec<u64> {
        let mut out = vec![0u64];
        for &b in &self.basis {
            let more: Vec<u64> = out.iter().map(|&x| x ^ b).collect();
            out.extend(more);
        }
        out.sort_unstable();
        out
    }
}

pub fn ty_transparent(d: &TyBraidData) -> Transparent {
    let diag = d.diagonal();
    if diag == 0 {
        return Transparent {
            basis: (0..d.m).map(|i| 1 << i).collect(),
            index: 1,
        };
    }
    let p = diag.trailing_zeros() as usize;
    let basis = (0..d.m)
        .filter(|&i| i != p)
        .map(|i| if (diag >> i) & 1 == 1 { (1 << i) | (1 << p) } else { 1 << i })
        .collect();
    Transparent { basis, index: 2 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Modularization {
    /// Pointed modular category of FP dimension 4.
    Pointed,
    /// Ising category: rank 3, FP dimension 4.
    Ising,
    /// Either the category is symmetric or its modularization is pointed of
    /// FP dimension 2; the fusion data alone does not decide which.
    SymmetricOrPointedFpdim2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularizationPrediction {
    pub m: usize,
    pub transparent: Transparent,
    pub integral: bool,
    pub symmetric_possible: bool,
    pub modularization: Modularization,
    /// FP dimension of the modularization when it is determined.
    pub modularization_fpdim: Option<u32>,
}

impl fmt::Display for ModularizationPrediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let integral = if self.integral { "integral" } else { "non-integral" };
        match self.modularization {
            Modularization::Pointed => write!(f, "{integral}; modularization: pointed, FPdim 4"),
            Modularization::Ising => write!(f, "{integral}; modularization: Ising"),
            Modularization::SymmetricOrPointedFpdim2 => write!(
                f,
                "{integral}; either symmetric, or modularization pointed with FPdim 2"
            ),
        }
    }
}

/// Predicts the modularization of a braided TY category from its bicharacter.
pub fn ty_modularization_predict(d: &TyBraidData) -> ModularizationPrediction {
    let transparent = ty_transparent(d);
    let integral = d.m % 2 == 0;
    let (modularization, fpdim) = match (transparent.index, integral) {
        (1, _) => (Modularization::SymmetricOrPointedFpdim2, None),
        (_, true) => (Modularization::Pointed, Some(4)),
        (_, false) => (Modularization::Ising, Some(4)),
    };
    ModularizationPrediction {
        m: d.m,
        symmetric_possible: transparent.index == 1,
        transparent,
        integral,
        modularization,
        modularization_fpdim: fpdim,
    }
}
