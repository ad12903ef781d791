//! Line-oriented text formats: fusion-ring documents, group tables, and
//! bicharacter rows.
//!
//! A ring document looks like
//!
//! ```text
//! fusionring 1
//! rank 3
//! unit 0
//! labels 1 a X
//! dual 0 1 2
//! meta family ising
//! N 0 0 0 1
//! N 0 1 1 1
//! ```
//!
//! Only nonzero structure constants need to be listed. `#` starts a comment
//! line. [`serialize`] writes the canonical form: headers in the order above,
//! then every nonzero `N i j k v` sorted by `(i, j, k)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::analysis::TyBraidData;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::ring::FusionRing;

pub const FORMAT_VERSION: u32 = 1;

/// Largest rank a document may declare. Also bounds generated families.
pub const MAX_RANK: usize = 64;

/// Largest order accepted for a group-table document.
pub const MAX_GROUP_ORDER: usize = 256;

/// The parsed but not yet validated contents of a ring document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDocument {
    pub version: u32,
    pub rank: usize,
    pub unit: usize,
    pub labels: Vec<String>,
    pub dual: Vec<usize>,
    pub meta: Vec<(String, String)>,
    /// `(i, j, k, N_{ij}^k)`, sorted by index triple, no duplicates.
    pub entries: Vec<(usize, usize, usize, u32)>,
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    /// Whitespace-separated tokens with their 1-based columns.
    fn tokens(&self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        let mut start = None;
        for (pos, ch) in self.text.char_indices().chain([(self.text.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    out.push((self.text[..s].chars().count() + 1, &self.text[s..pos]));
                    start = None;
                }
                _ => {}
            }
        }
        out
    }

    fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn number<T: std::str::FromStr>(&self, (column, token): (usize, &str)) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        token
            .parse::<T>()
            .map_err(|e| self.error(column, format!("`{token}`: {e}")))
    }
}

/// Non-blank, non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines()
        .enumerate()
        .map(|(n, text)| Line { number: n + 1, text })
        .filter(|l| {
            let t = l.text.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn end_of_input(text: &str, message: &str) -> Error {
    Error::Syntax {
        line: text.lines().count().max(1),
        column: 1,
        message: message.to_string(),
    }
}

pub fn parse_document(text: &str) -> Result<RingDocument> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| end_of_input(text, "empty document"))?;
    let toks = header.tokens();
    match toks.as_slice() {
        [(_, "fusionring"), v] => {
            let version: u32 = header.number(*v)?;
            if version != FORMAT_VERSION {
                return Err(header.error(v.0, format!("unsupported format version {version}")));
            }
        }
        _ => return Err(header.error(1, "expected `fusionring 1`")),
    }

    let mut rank: Option<usize> = None;
    let mut unit: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut dual: Option<Vec<usize>> = None;
    let mut meta: Vec<(String, String)> = Vec::new();
    let mut entries: BTreeMap<(usize, usize, usize), u32> = BTreeMap::new();

    for line in lines {
        let toks = line.tokens();
        let (kw_col, kw) = toks[0];
        let args = &toks[1..];
        let need_rank = |rank: Option<usize>| {
            rank.ok_or_else(|| line.error(kw_col, format!("`{kw}` before `rank`")))
        };
        let duplicate = || line.error(kw_col, format!("duplicate `{kw}` line"));
        match kw {
            "rank" => {
                if rank.is_some() {
                    return Err(duplicate());
                }
                let [arg] = args else {
                    return Err(line.error(kw_col, "expected `rank R`"));
                };
                let r: usize = line.number(*arg)?;
                if r == 0 || r > MAX_RANK {
                    return Err(line.error(arg.0, format!("rank must be between 1 and {MAX_RANK}")));
                }
                rank = Some(r);
            }
            "unit" => {
                let r = need_rank(rank)?;
                if unit.is_some() {
                    return Err(duplicate());
                }
                let [arg] = args else {
                    return Err(line.error(kw_col, "expected `unit U`"));
                };
                let u: usize = line.number(*arg)?;
                if u >= r {
                    return Err(line.error(arg.0, format!("unit {u} out of range")));
                }
                unit = Some(u);
            }
            "labels" => {
                let r = need_rank(rank)?;
                if labels.is_some() {
                    return Err(duplicate());
                }
                if args.len() != r {
                    return Err(line.error(kw_col, format!("expected {r} labels, got {}", args.len())));
                }
                labels = Some(args.iter().map(|(_, t)| t.to_string()).collect());
            }
            "dual" => {
                let r = need_rank(rank)?;
                if dual.is_some() {
                    return Err(duplicate());
                }
                if args.len() != r {
                    return Err(line.error(kw_col, format!("expected {r} dual indices, got {}", args.len())));
                }
                let mut d = Vec::with_capacity(r);
                for &arg in args {
                    let x: usize = line.number(arg)?;
                    if x >= r {
                        return Err(line.error(arg.0, format!("index {x} out of range")));
                    }
                    d.push(x);
                }
                dual = Some(d);
            }
            "meta" => {
                let Some(&(col, key)) = args.first() else {
                    return Err(line.error(kw_col, "expected `meta KEY VALUE`"));
                };
                if meta.iter().any(|(k, _)| k == key) {
                    return Err(line.error(col, format!("duplicate meta key `{key}`")));
                }
                let value = args
                    .get(1)
                    .map(|&(c, _)| {
                        let offset: usize = line.text.char_indices().nth(c - 1).map(|(b, _)| b).unwrap_or(0);
                        line.text[offset..].trim_end().to_string()
                    })
                    .unwrap_or_default();
                meta.push((key.to_string(), value));
            }
            "N" => {
                let r = need_rank(rank)?;
                let [a, b, c, v] = args else {
                    return Err(line.error(kw_col, "expected `N i j k value`"));
                };
                let mut idx = [0usize; 3];
                for (slot, &arg) in idx.iter_mut().zip([a, b, c]) {
                    let x: usize = line.number(arg)?;
                    if x >= r {
                        return Err(line.error(arg.0, format!("index {x} out of range")));
                    }
                    *slot = x;
                }
                let value: u32 = line.number(*v)?;
                if entries.insert((idx[0], idx[1], idx[2]), value).is_some() {
                    return Err(line.error(kw_col, format!("duplicate entry for {idx:?}")));
                }
            }
            other => return Err(line.error(kw_col, format!("unknown keyword `{other}`"))),
        }
    }

    let rank = rank.ok_or_else(|| end_of_input(text, "missing `rank`"))?;
    let dual = dual.ok_or_else(|| end_of_input(text, "missing `dual`"))?;
    Ok(RingDocument {
        version: FORMAT_VERSION,
        rank,
        unit: unit.unwrap_or(0),
        labels: labels.unwrap_or_else(|| (0..rank).map(|i| format!("x{i}")).collect()),
        dual,
        meta,
        entries: entries
            .into_iter()
            .filter(|&(_, v)| v > 0)
            .map(|((i, j, k), v)| (i, j, k, v))
            .collect(),
    })
}

impl RingDocument {
    pub fn from_ring(ring: &FusionRing, meta: Vec<(String, String)>) -> Self {
        let r = ring.rank();
        let mut entries = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for k in ring.support(i, j) {
                    entries.push((i, j, k, ring.n(i, j, k)));
                }
            }
        }
        RingDocument {
            version: FORMAT_VERSION,
            rank: r,
            unit: 0,
            labels: ring.labels().to_vec(),
            dual: ring.duals().to_vec(),
            meta,
            entries,
        }
    }

    /// Validates the document and moves its unit to index 0.
    pub fn to_ring(&self) -> Result<FusionRing> {
        let r = self.rank;
        let mut constants = vec![0u32; r * r * r];
        for &(i, j, k, v) in &self.entries {
            constants[(i * r + j) * r + k] = v;
        }
        let ring = FusionRing::new_unchecked(r, self.dual.clone(), constants, self.labels.clone());
        let ring = if self.unit == 0 {
            ring
        } else {
            let mut perm: Vec<usize> = (0..r).collect();
            perm.swap(0, self.unit);
            ring.permuted(&perm)
        };
        ring.verify()?;
        Ok(ring)
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.meta.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

fn label_token(label: &str) -> String {
    if label.is_empty() {
        return "_".to_string();
    }
    label.chars().map(|c| if c.is_whitespace() { '_' } else { c }).collect()
}

impl std::fmt::Display for RingDocument {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "fusionring {}", self.version)?;
        writeln!(f, "rank {}", self.rank)?;
        writeln!(f, "unit {}", self.unit)?;
        let labels: Vec<String> = self.labels.iter().map(|l| label_token(l)).collect();
        writeln!(f, "labels {}", labels.join(" "))?;
        let dual: Vec<String> = self.dual.iter().map(|d| d.to_string()).collect();
        writeln!(f, "dual {}", dual.join(" "))?;
        for (k, v) in &self.meta {
            if v.is_empty() {
                writeln!(f, "meta {}", label_token(k))?;
            } else {
                writeln!(f, "meta {} {}", label_token(k), v.trim().replace('\n', " "))?;
            }
        }
        for &(i, j, k, v) in &self.entries {
            writeln!(f, "N {i} {j} {k} {v}")?;
        }
        Ok(())
    }
}

/// Parses and validates a ring document.
pub fn parse(text: &str) -> Result<FusionRing> {
    parse_document(text)?.to_ring()
}

/// Canonical document for `ring`, without metadata.
pub fn serialize(ring: &FusionRing) -> String {
    RingDocument::from_ring(ring, Vec::new()).to_string()
}

pub fn serialize_with_meta(ring: &FusionRing, meta: Vec<(String, String)>) -> String {
    RingDocument::from_ring(ring, meta).to_string()
}

/// Parses a group table:
///
/// ```text
/// grouptable 1
/// order 2
/// labels e g
/// 0 1
/// 1 0
/// ```
///
/// Row `a` lists `a·b` for every `b`. The `labels` line is optional.
pub fn parse_group_table(text: &str) -> Result<GroupTable> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| end_of_input(text, "empty group table"))?;
    match header.tokens().as_slice() {
        [(_, "grouptable"), v] => {
            let version: u32 = header.number(*v)?;
            if version != FORMAT_VERSION {
                return Err(header.error(v.0, format!("unsupported format version {version}")));
            }
        }
        _ => return Err(header.error(1, "expected `grouptable 1`")),
    }
    let order_line = lines.next().ok_or_else(|| end_of_input(text, "missing `order`"))?;
    let order: usize = match order_line.tokens().as_slice() {
        [(_, "order"), n] => order_line.number(*n)?,
        _ => return Err(order_line.error(1, "expected `order N`")),
    };
    if order == 0 || order > MAX_GROUP_ORDER {
        return Err(order_line.error(1, format!("order must be between 1 and {MAX_GROUP_ORDER}")));
    }
    let mut labels = None;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(order);
    for line in lines {
        let toks = line.tokens();
        if toks[0].1 == "labels" {
            if labels.is_some() || !rows.is_empty() {
                return Err(line.error(toks[0].0, "`labels` must come once, before the rows"));
            }
            if toks.len() != order + 1 {
                return Err(line.error(toks[0].0, format!("expected {order} labels")));
            }
            labels = Some(toks[1..].iter().map(|(_, t)| t.to_string()).collect::<Vec<_>>());
            continue;
        }
        if rows.len() == order {
            return Err(line.error(1, format!("more than {order} rows")));
        }
        if toks.len() != order {
            return Err(line.error(1, format!("expected {order} entries, got {}", toks.len())));
        }
        let mut row = Vec::with_capacity(order);
        for &tok in &toks {
            let x: usize = line.number(tok)?;
            if x >= order {
                return Err(line.error(tok.0, format!("element {x} out of range")));
            }
            row.push(x);
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(end_of_input(text, &format!("expected {order} rows, got {}", rows.len())));
    }
    match labels {
        Some(l) => GroupTable::from_table_with_labels(rows, l),
        None => GroupTable::from_table(rows),
    }
}

pub fn serialize_group_table(group: &GroupTable) -> String {
    let mut out = format!("grouptable {FORMAT_VERSION}\norder {}\n", group.order());
    let labels: Vec<String> = group.labels().iter().map(|l| label_token(l)).collect();
    let _ = writeln!(out, "labels {}", labels.join(" "));
    for row in group.table() {
        let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses the rows of a bicharacter matrix over `F2`: `m` strings of `0`/`1`
/// of length `m`, separated by commas, semicolons or whitespace. `1` alone is
/// the `1×1` matrix `[1]`.
pub fn parse_bichar(m: usize, text: &str) -> Result<TyBraidData> {
    if m == 0 || m > TyBraidData::MAX_RANK {
        return Err(Error::InvalidBicharacter(format!(
            "rank must be between 1 and {}",
            TyBraidData::MAX_RANK
        )));
    }
    let rows: Vec<&str> = text
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if rows.len() != m {
        return Err(Error::InvalidBicharacter(format!("expected {m} rows, got {}", rows.len())));
    }
    let mut bits = Vec::with_capacity(m);
    for (i, row) in rows.iter().enumerate() {
        if row.chars().count() != m {
            return Err(Error::InvalidBicharacter(format!("row {i} should have {m} entries")));
        }
        let mut mask = 0u64;
        for (j, c) in row.chars().enumerate() {
            match c {
                '0' => {}
                '1' => mask |= 1 << j,
                other => {
                    return Err(Error::InvalidBicharacter(format!("row {i} has `{other}`, expected 0 or 1")))
                }
            }
        }
        bits.push(mask);
    }
    TyBraidData::new(m, bits)
}

/// Inverse of [`parse_bichar`], rows joined by commas.
pub fn format_bichar(d: &TyBraidData) -> String {
    d.rows()
        .iter()
        .map(|&row| (0..d.m()).map(|j| if (row >> j) & 1 == 1 { '1' } else { '0' }).collect::<String>())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Identity;
    use crate::families::{corpus, gen_ising, gen_moore_read, gen_verlinde, rep_corpus};

    #[test]
    fn round_trips() {
        for ring in [gen_moore_read(), gen_verlinde(4), rep_corpus("A4").unwrap(), gen_ising()] {
            let text = serialize(&ring);
            let back = parse(&text).unwrap();
            assert_eq!(back, ring);
            assert_eq!(serialize(&back), text);
        }
    }

    #[test]
    fn corpus_round_trips() {
        for e in corpus() {
            assert_eq!(parse(&serialize(&e.ring)).unwrap(), e.ring, "{}", e.name);
        }
    }

    #[test]
    fn ising_document() {
        let text = serialize(&gen_ising());
        let expected = "fusionring 1\nrank 3\nunit 0\nlabels 1 a X\ndual 0 1 2\n\
                        N 0 0 0 1\nN 0 1 1 1\nN 0 2 2 1\nN 1 0 1 1\nN 1 1 0 1\nN 1 2 2 1\n\
                        N 2 0 2 1\nN 2 1 2 1\nN 2 2 0 1\nN 2 2 1 1\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn zero_entries_are_ignored() {
        let sparse = serialize(&gen_ising());
        let mut dense = String::from("fusionring 1\nrank 3\nlabels 1 a X\ndual 0 1 2\n");
        let ising = gen_ising();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    dense.push_str(&format!("N {i} {j} {k} {}\n", ising.n(i, j, k)));
                }
            }
        }
        assert_eq!(parse(&dense).unwrap(), parse(&sparse).unwrap());
    }

    #[test]
    fn unit_is_moved_to_front() {
        // Z2 with the unit stored at index 1
        let text = "fusionring 1\nrank 2\nunit 1\nlabels g e\ndual 0 1\n\
                    N 0 0 1 1\nN 0 1 0 1\nN 1 0 0 1\nN 1 1 1 1\n";
        let ring = parse(text).unwrap();
        assert_eq!(ring.labels(), ["e", "g"]);
        assert_eq!(ring.n(1, 1, 0), 1);
    }

    #[test]
    fn metadata_survives() {
        let meta = vec![
            ("family".to_string(), "gen_ty".to_string()),
            ("params".to_string(), "group=4 subgroup=2 coset=1".to_string()),
        ];
        let text = serialize_with_meta(&gen_moore_read(), meta.clone());
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.meta, meta);
        assert_eq!(doc.to_string(), text);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse("fusionring 1\nrank 2\ndual 0 1\nN 0 0 zero 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 4, column: 7, .. }), "{err}");
        let err = parse("fusionring 1\n\n# comment\nrank 2\ndual 0 5\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 5, column: 8, .. }), "{err}");
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse("fusionring 2\n"), Err(Error::Syntax { line: 1, column: 12, .. })));
        assert!(matches!(parse("fusionring 1\nrank 999\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("fusionring 1\nrank 1\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("fusionring 1\nbogus\n"), Err(Error::Syntax { line: 2, column: 1, .. })));
        assert!(matches!(
            parse("fusionring 1\nrank 1\ndual 0\nN 0 0 0 1\nN 0 0 0 1\n"),
            Err(Error::Syntax { line: 5, .. })
        ));
    }

    #[test]
    fn bad_dual_is_an_axiom_error() {
        let text = "fusionring 1\nrank 3\ndual 0 2 2\nN 0 0 0 1\n";
        match parse(text) {
            Err(Error::Axiom(v)) => assert_eq!(v.identity, Identity::Involution),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn group_tables() {
        for g in [GroupTable::cyclic(4), GroupTable::symmetric(3), GroupTable::quaternion()] {
            let text = serialize_group_table(&g);
            let back = parse_group_table(&text).unwrap();
            assert_eq!(back.table(), g.table());
            assert_eq!(back.labels(), g.labels());
        }
        assert!(parse_group_table("grouptable 1\norder 2\n0 1\n1 1\n").is_err());
        assert!(matches!(
            parse_group_table("grouptable 1\norder 2\n0 1\n1 x\n"),
            Err(Error::Syntax { line: 4, column: 3, .. })
        ));
    }

    #[test]
    fn bicharacters() {
        assert_eq!(parse_bichar(1, "1").unwrap(), TyBraidData::identity(1).unwrap());
        assert_eq!(parse_bichar(2, "10,01").unwrap(), TyBraidData::identity(2).unwrap());
        assert_eq!(format_bichar(&parse_bichar(2, "01;10").unwrap()), "01,10");
        assert!(parse_bichar(2, "10").is_err());
        assert!(parse_bichar(2, "11,11").is_err());
        assert!(parse_bichar(2, "1x,01").is_err());
        assert!(parse_bichar(0, "").is_err());
    }
}
