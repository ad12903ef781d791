use std::fmt;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::io::MAX_RANK;
use crate::ring::FusionRing;

const MAX_KAPPA: u32 = 1000;

/// How a family parameter names its group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Invariant factors, e.g. `[2, 2]` for `Z2 × Z2`.
    Abelian(Vec<usize>),
    /// `S3`, `D4` or `Q8`.
    Named(String),
    /// An explicit multiplication table loaded by the caller.
    Table(GroupTable),
}

impl GroupSpec {
    pub fn table(&self) -> Result<GroupTable> {
        match self {
            GroupSpec::Abelian(f) => GroupTable::abelian(f),
            GroupSpec::Named(name) => match name.as_str() {
                "S3" => Ok(GroupTable::symmetric(3)),
                "D4" => Ok(GroupTable::dihedral(4)),
                "Q8" => Ok(GroupTable::quaternion()),
                other => Err(Error::InvalidParameters(format!("unknown group `{other}`"))),
            },
            GroupSpec::Table(t) => Ok(t.clone()),
        }
    }

    /// Parses the element syntax of this group: a digit vector `a,b,…` over
    /// the invariant factors, or a plain table index otherwise.
    fn element(&self, text: &str) -> Result<usize> {
        let bad = |why: String| Error::InvalidParameters(format!("group element `{text}`: {why}"));
        let digits: Vec<usize> = text
            .split(',')
            .map(|d| d.trim().parse::<usize>().map_err(|e| bad(e.to_string())))
            .collect::<Result<_>>()?;
        match self {
            GroupSpec::Abelian(factors) => {
                let factors: &[usize] = if factors.is_empty() { &[1] } else { factors };
                if digits.len() != factors.len() {
                    return Err(bad(format!("expected {} components", factors.len())));
                }
                if let Some((d, f)) = digits.iter().zip(factors).find(|(d, f)| d >= f) {
                    return Err(bad(format!("component {d} is not below {f}")));
                }
                Ok(digits.iter().zip(factors).fold(0, |acc, (&d, &f)| acc * f + d))
            }
            _ => {
                let order = self.table()?.order();
                match digits[..] {
                    [x] if x < order => Ok(x),
                    _ => Err(bad(format!("expected one index below {order}"))),
                }
            }
        }
    }

    fn element_text(&self, mut x: usize) -> String {
        match self {
            GroupSpec::Abelian(factors) if !factors.is_empty() => {
                let mut digits = vec![0; factors.len()];
                for (slot, &f) in digits.iter_mut().zip(factors).rev() {
                    *slot = x % f;
                    x /= f;
                }
                digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
            }
            _ => x.to_string(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Abelian(factors) if factors.is_empty() => f.write_str("1"),
            GroupSpec::Abelian(factors) => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                f.write_str(&parts.join(","))
            }
            GroupSpec::Named(name) => f.write_str(name),
            GroupSpec::Table(_) => f.write_str("table"),
        }
    }
}

/// A named family together with validated parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Pointed { group: GroupSpec },
    Ty { group: GroupSpec },
    NearGroup { group: GroupSpec, kappa: u32 },
    Verlinde { n: usize },
    MooreRead,
    GenTy { group: GroupSpec, subgroup: Vec<usize>, coset: usize },
    Ising,
    YangLee,
    RepCorpus { key: String },
}

pub const FAMILY_NAMES: &[&str] = &[
    "pointed",
    "ty",
    "near_group",
    "verlinde",
    "moore_read",
    "gen_ty",
    "ising",
    "yang_lee",
    "rep_corpus",
];

impl FamilySpec {
    /// Parses `key=value` parameters for `family`.
    ///
    /// Recognized keys are `group` (invariant factors like `2,2`, or `S3`,
    /// `D4`, `Q8`), `table` (a path handed to `load_table`), `kappa`, `n`,
    /// `subgroup` (generators separated by `;`), `coset` and `key`.
    pub fn parse<S: AsRef<str>>(
        family: &str,
        params: &[S],
        load_table: impl Fn(&str) -> Result<GroupTable>,
    ) -> Result<Self> {
        let mut pairs: Vec<(&str, &str)> = Vec::new();
        for p in params {
            let p = p.as_ref();
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameters(format!("expected key=value, got `{p}`")))?;
            if pairs.iter().any(|(seen, _)| *seen == k) {
                return Err(Error::InvalidParameters(format!("duplicate parameter `{k}`")));
            }
            pairs.push((k.trim(), v.trim()));
        }
        let allowed: &[&str] = match family {
            "pointed" | "ty" => &["group", "table"],
            "near_group" => &["group", "table", "kappa"],
            "verlinde" => &["n"],
            "moore_read" | "ising" | "yang_lee" => &[],
            "gen_ty" => &["group", "table", "subgroup", "coset"],
            "rep_corpus" => &["key"],
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        if let Some((k, _)) = pairs.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(Error::InvalidParameters(format!("`{k}` does not apply to {family}")));
        }
        let get = |key: &str| pairs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
        let required = |key: &str| {
            get(key).ok_or_else(|| Error::InvalidParameters(format!("{family} needs `{key}=`")))
        };
        let number = |key: &str| -> Result<usize> {
            required(key)?
                .parse::<usize>()
                .map_err(|e| Error::InvalidParameters(format!("{key}: {e}")))
        };
        let group = || -> Result<GroupSpec> {
            let spec = match (get("group"), get("table")) {
                (Some(_), Some(_)) => {
                    return Err(Error::InvalidParameters("give either group= or table=".into()))
                }
                (None, Some(path)) => GroupSpec::Table(load_table(path)?),
                (Some(g), None) if matches!(g, "S3" | "D4" | "Q8") => GroupSpec::Named(g.to_string()),
                (Some(g), None) => {
                    let factors = g
                        .split(',')
                        .map(|f| f.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| Error::InvalidParameters(format!("group `{g}`: {e}")))?;
                    if factors.contains(&0) {
                        return Err(Error::InvalidParameters("invariant factor 0".into()));
                    }
                    factors
                        .iter()
                        .try_fold(1usize, |acc, &f| acc.checked_mul(f))
                        .filter(|&o| o < MAX_RANK)
                        .ok_or_else(|| {
                            Error::InvalidParameters(format!("group order must be below {MAX_RANK}"))
                        })?;
                    let factors = factors.into_iter().filter(|&f| f > 1).collect();
                    GroupSpec::Abelian(factors)
                }
                (None, None) => return Err(Error::InvalidParameters(format!("{family} needs `group=`"))),
            };
            if spec.table()?.order() >= MAX_RANK {
                return Err(Error::InvalidParameters(format!("group order must be below {MAX_RANK}")));
            }
            Ok(spec)
        };

        Ok(match family {
            "pointed" => FamilySpec::Pointed { group: group()? },
            "ty" => FamilySpec::Ty { group: group()? },
            "near_group" => {
                let kappa = number("kappa")?;
                if kappa > MAX_KAPPA as usize {
                    return Err(Error::InvalidParameters(format!("kappa must be at most {MAX_KAPPA}")));
                }
                FamilySpec::NearGroup {
                    group: group()?,
                    kappa: kappa as u32,
                }
            }
            "verlinde" => {
                let n = number("n")?;
                if n + 1 > MAX_RANK {
                    return Err(Error::InvalidParameters(format!("n must be below {MAX_RANK}")));
                }
                FamilySpec::Verlinde { n }
            }
            "moore_read" => FamilySpec::MooreRead,
            "ising" => FamilySpec::Ising,
            "yang_lee" => FamilySpec::YangLee,
            "gen_ty" => {
                let group = group()?;
                let subgroup = match get("subgroup") {
                    None | Some("") => Vec::new(),
                    Some(s) => s.split(';').map(|e| group.element(e)).collect::<Result<_>>()?,
                };
                let coset = match get("coset") {
                    None => 0,
                    Some(c) => group.element(c)?,
                };
                FamilySpec::GenTy {
                    group,
                    subgroup,
                    coset,
                }
            }
            "rep_corpus" => FamilySpec::RepCorpus {
                key: required("key")?.to_string(),
            },
            _ => unreachable!("family names were matched above"),
        })
    }

    pub fn family(&self) -> &'static str {
        match self {
            FamilySpec::Pointed { .. } => "pointed",
            FamilySpec::Ty { .. } => "ty",
            FamilySpec::NearGroup { .. } => "near_group",
            FamilySpec::Verlinde { .. } => "verlinde",
            FamilySpec::MooreRead => "moore_read",
            FamilySpec::GenTy { .. } => "gen_ty",
            FamilySpec::Ising => "ising",
            FamilySpec::YangLee => "yang_lee",
            FamilySpec::RepCorpus { .. } => "rep_corpus",
        }
    }

    /// Canonical `key=value` parameters, suitable for [`FamilySpec::parse`]
    /// (except for explicit tables, which render as `table`).
    pub fn to_params(&self) -> Vec<String> {
        match self {
            FamilySpec::Pointed { group } | FamilySpec::Ty { group } => vec![format!("group={group}")],
            FamilySpec::NearGroup { group, kappa } => {
                vec![format!("group={group}"), format!("kappa={kappa}")]
            }
            FamilySpec::Verlinde { n } => vec![format!("n={n}")],
            FamilySpec::MooreRead | FamilySpec::Ising | FamilySpec::YangLee => Vec::new(),
            FamilySpec::GenTy {
                group,
                subgroup,
                coset,
            } => {
                let gens: Vec<String> = subgroup.iter().map(|&g| group.element_text(g)).collect();
                vec![
                    format!("group={group}"),
                    format!("subgroup={}", gens.join(";")),
                    format!("coset={}", group.element_text(*coset)),
                ]
            }
            FamilySpec::RepCorpus { key } => vec![format!("key={key}")],
        }
    }

    /// Builds the ring. Fails if it would exceed the document rank limit.
    pub fn build(&self) -> Result<FusionRing> {
        use super::*;
        let ring = match self {
            FamilySpec::Pointed { group } => gen_pointed(&group.table()?),
            FamilySpec::Ty { group } => gen_ty(&group.table()?),
            FamilySpec::NearGroup { group, kappa } => gen_near_group(&group.table()?, *kappa),
            FamilySpec::Verlinde { n } => gen_verlinde(*n),
            FamilySpec::MooreRead => gen_moore_read(),
            FamilySpec::GenTy {
                group,
                subgroup,
                coset,
            } => gen_gen_ty(&group.table()?, subgroup, *coset)?,
            FamilySpec::Ising => gen_ising(),
            FamilySpec::YangLee => gen_yang_lee(),
            FamilySpec::RepCorpus { key } => rep_corpus(key)?,
        };
        if ring.rank() > MAX_RANK {
            return Err(Error::InvalidParameters(format!(
                "rank {} exceeds the limit {MAX_RANK}",
                ring.rank()
            )));
        }
        Ok(ring)
    }
}
