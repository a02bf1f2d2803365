//! The table corpus: parsing, dependency order and static checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{GroupKind, Listing};
use crate::bincode::{EnumeratorForm, EnumeratorParams};
use crate::error::{Error, Result};
use crate::rings::RingId;

/// The corpus shipped with the crate.
pub const BUILTIN: &str = include_str!("../../data/corpus.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRow {
    pub ring: RingId,
    pub groups: Vec<GroupKind>,
    pub listings: Vec<Listing>,
    pub v1: String,
    pub v2: String,
    pub ra: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionRow {
    pub ring: RingId,
    pub parents: Vec<String>,
    pub c: String,
    pub x: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighbourRow {
    pub parents: Vec<String>,
    /// Coordinates `35..=68` of `x`.
    pub x: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowKind {
    Construction(ConstructionRow),
    Extension(ExtensionRow),
    Neighbour(NeighbourRow),
}

impl RowKind {
    pub fn name(&self) -> &'static str {
        match self {
            RowKind::Construction(_) => "construction",
            RowKind::Extension(_) => "extension",
            RowKind::Neighbour(_) => "neighbour",
        }
    }

    /// Parent candidates in trial order; empty for constructions.
    pub fn parents(&self) -> &[String] {
        match self {
            RowKind::Construction(_) => &[],
            RowKind::Extension(e) => &e.parents,
            RowKind::Neighbour(n) => &n.parents,
        }
    }
}

/// Published parameters of a row. `None` means the source does not state it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub form: Option<EnumeratorForm>,
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
    /// Automorphism group order, informational only.
    pub aut: String,
}

impl Expected {
    pub fn matches(&self, n: usize, k: usize, d: Option<usize>, params: Option<&EnumeratorParams>) -> bool {
        let params_ok = match params {
            Some(p) => {
                self.form.is_none_or(|f| f == p.form)
                    && self.beta.is_none_or(|b| b == p.beta)
                    && self.gamma.is_none_or(|g| p.gamma == Some(g))
            }
            None => self.form.is_none() && self.beta.is_none() && self.gamma.is_none(),
        };
        n == self.n && k == self.k && d == Some(self.d) && params_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub id: String,
    pub kind: RowKind,
    pub expected: Expected,
    /// Listed as previously unknown.
    pub new: bool,
}

fn alternatives<T: FromStr<Err = Error>>(field: &str) -> Result<Vec<T>> {
    field.split('|').map(str::parse).collect()
}

fn optional<T: FromStr>(field: &str, what: &str) -> Result<Option<T>> {
    if field == "-" {
        return Ok(None);
    }
    field.parse().map(Some).map_err(|_| Error::Parse(format!("bad {what} `{field}`")))
}

impl FromStr for TableRow {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let (spec, expected) = line
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("missing `;` in `{line}`")))?;
        let f: Vec<&str> = spec.split_whitespace().collect();
        let e: Vec<&str> = expected.split_whitespace().collect();
        let arity = |want: usize| {
            if f.len() == want {
                Ok(())
            } else {
                Err(Error::Parse(format!("{} fields where {want} expected in `{line}`", f.len())))
            }
        };
        if f.len() < 2 {
            return Err(Error::Parse(format!("truncated row `{line}`")));
        }
        let parents = |s: &str| s.split('|').map(String::from).collect::<Vec<_>>();
        let kind = match f[1] {
            "construction" => {
                arity(8)?;
                RowKind::Construction(ConstructionRow {
                    ring: f[2].parse()?,
                    groups: alternatives(f[3])?,
                    listings: alternatives(f[4])?,
                    v1: f[5].into(),
                    v2: f[6].into(),
                    ra: f[7].into(),
                })
            }
            "extension" => {
                arity(6)?;
                RowKind::Extension(ExtensionRow { ring: f[2].parse()?, parents: parents(f[3]), c: f[4].into(), x: f[5].into() })
            }
            "neighbour" => {
                arity(5)?;
                if f[2] != "F2" {
                    return Err(Error::Parse(format!("neighbour rows are binary, got ring {}", f[2])));
                }
                RowKind::Neighbour(NeighbourRow { parents: parents(f[3]), x: f[4].into() })
            }
            other => return Err(Error::Parse(format!("unknown row kind `{other}`"))),
        };
        if e.len() != 8 {
            return Err(Error::Parse(format!("{} expectation fields in `{line}`, need 8", e.len())));
        }
        let num = |s: &str, what: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad {what} `{s}`")));
        let expected = Expected {
            n: num(e[0], "n")?,
            k: num(e[1], "k")?,
            d: num(e[2], "d")?,
            form: optional(e[3], "form")?,
            beta: optional(e[4], "beta")?,
            gamma: optional(e[5], "gamma")?,
            aut: e[6].into(),
        };
        let new = match e[7] {
            "new" => true,
            "known" => false,
            s => return Err(Error::Parse(format!("status must be new or known, got `{s}`"))),
        };
        Ok(TableRow { id: f[0].into(), kind, expected, new })
    }
}

/// An ordered, dependency-checked set of rows.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    rows: Vec<TableRow>,
}

impl Corpus {
    pub fn builtin() -> Corpus {
        BUILTIN.parse().expect("built-in corpus is well formed")
    }

    /// Rows must reference existing ids and form an acyclic graph.
    pub fn new(rows: Vec<TableRow>) -> Result<Corpus> {
        let mut seen = BTreeSet::new();
        for row in &rows {
            if !seen.insert(row.id.as_str()) {
                return Err(Error::Parse(format!("duplicate row id `{}`", row.id)));
            }
        }
        for row in &rows {
            if let Some(p) = row.kind.parents().iter().find(|p| !seen.contains(p.as_str())) {
                return Err(Error::UnknownRow(format!("{p} (parent of {})", row.id)));
            }
        }
        let corpus = Corpus { rows };
        corpus.levels()?;
        Ok(corpus)
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.id == id)
    }

    /// Rows grouped so that every parent sits in an earlier group.
    pub fn levels(&self) -> Result<Vec<Vec<&TableRow>>> {
        let mut depth: BTreeMap<&str, usize> = BTreeMap::new();
        let mut remaining: Vec<&TableRow> = self.rows.iter().collect();
        while !remaining.is_empty() {
            let before = remaining.len();
            remaining.retain(|row| {
                let parents = row.kind.parents();
                if parents.iter().all(|p| depth.contains_key(p.as_str())) {
                    let d = parents.iter().map(|p| depth[p.as_str()] + 1).max().unwrap_or(0);
                    depth.insert(&row.id, d);
                    false
                } else {
                    true
                }
            });
            if remaining.len() == before {
                let ids: Vec<&str> = remaining.iter().map(|r| r.id.as_str()).collect();
                return Err(Error::Parse(format!("dependency cycle among {}", ids.join(", "))));
            }
        }
        let mut levels = vec![Vec::new(); depth.values().max().map_or(0, |m| m + 1)];
        for row in &self.rows {
            levels[depth[row.id.as_str()]].push(row);
        }
        Ok(levels)
    }

    /// The rows named in `ids` together with everything they depend on.
    pub fn restrict<S: AsRef<str>>(&self, ids: &[S]) -> Result<Corpus> {
        let mut keep = BTreeSet::new();
        let mut stack: Vec<String> = ids.iter().map(|s| s.as_ref().to_string()).collect();
        while let Some(id) = stack.pop() {
            let row = self.get(&id).ok_or_else(|| Error::UnknownRow(id.clone()))?;
            if keep.insert(id) {
                stack.extend(row.kind.parents().iter().cloned());
            }
        }
        Ok(Corpus { rows: self.rows.iter().filter(|r| keep.contains(&r.id)).cloned().collect() })
    }
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(text: &str) -> Result<Corpus> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Corpus::new(rows)
    }
}

/// One problem found by [`lint`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintIssue {
    pub id: String,
    pub message: String,
}

impl fmt::Display for LintIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.message)
    }
}

/// Checks every expectation for internal consistency without building codes:
/// the form suits the length, `γ` is present exactly for `W68_2` and within
/// range, and the predicted `A_12`, `A_14` are non-negative.
pub fn lint(corpus: &Corpus) -> Vec<LintIssue> {
    let mut issues = Vec::new();
    for row in corpus.rows() {
        let mut flag = |message: String| issues.push(LintIssue { id: row.id.clone(), message });
        let e = &row.expected;
        if e.n != 2 * e.k {
            flag(format!("[{}, {}] cannot be self-dual", e.n, e.k));
        }
        if e.d % 2 != 0 {
            flag(format!("odd minimum distance {}", e.d));
        }
        if let RowKind::Construction(c) = &row.kind {
            for v in [&c.v1, &c.v2, &c.ra] {
                if let Err(err) = c.ring.parse_vector(v) {
                    flag(format!("seed `{v}`: {err}"));
                }
            }
            for g in &c.groups {
                let order = match *g {
                    GroupKind::Cyclic(n) => n,
                    GroupKind::Product(a, b) => a * b,
                };
                if [&c.v1, &c.v2, &c.ra].iter().any(|v| v.chars().count() != order) {
                    flag(format!("seed lengths do not match |{g}| = {order}"));
                }
                if 4 * order * c.ring.binary_width() != e.n {
                    flag(format!("{g} over {} gives binary length {}, expected {}", c.ring, 4 * order * c.ring.binary_width(), e.n));
                }
            }
        }
        if let RowKind::Neighbour(nb) = &row.kind {
            if nb.x.len() > e.n || nb.x.chars().any(|ch| ch != '0' && ch != '1') {
                flag(format!("neighbour vector `{}` is not a binary word within length {}", nb.x, e.n));
            } else if nb.x.chars().filter(|&ch| ch == '1').count() % 2 != 0 {
                flag("neighbour vector has odd weight".into());
            }
        }
        let Some(beta) = e.beta else {
            if e.form.is_some() || e.gamma.is_some() {
                flag("form or gamma given without beta".into());
            }
            continue;
        };
        let forms: &[EnumeratorForm] = match e.n {
            64 => &[EnumeratorForm::W64_1, EnumeratorForm::W64_2],
            68 => &[EnumeratorForm::W68_1, EnumeratorForm::W68_2],
            n => {
                flag(format!("no enumerator families for length {n}"));
                continue;
            }
        };
        if let Some(form) = e.form {
            if !forms.contains(&form) {
                flag(format!("{form} does not apply to length {}", e.n));
                continue;
            }
        }
        match (e.form, e.gamma) {
            (Some(EnumeratorForm::W68_2), None) => flag("W68_2 needs gamma".into()),
            (Some(f), Some(_)) if f != EnumeratorForm::W68_2 => flag(format!("{f} has no gamma")),
            (_, Some(g)) if !(0..=9).contains(&g) => flag(format!("gamma = {g} outside 0..=9")),
            _ => {}
        }
        let candidates: Vec<EnumeratorForm> = e.form.map_or_else(|| forms.to_vec(), |f| vec![f]);
        let feasible = candidates.iter().any(|&form| {
            let gamma = (form == EnumeratorForm::W68_2).then(|| e.gamma.unwrap_or(0));
            let (a12, a14) = EnumeratorParams { form, beta, gamma }.predicted();
            a12 >= 0 && a14 >= 0
        });
        if !feasible {
            flag(format!("beta = {beta} predicts a negative A_12 or A_14"));
        }
    }
    issues
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_lints_clean() {
        let corpus = Corpus::builtin();
        assert_eq!(corpus.rows().len(), 41);
        assert_eq!(corpus.rows().iter().filter(|r| r.new).count(), 32);
        assert!(lint(&corpus).is_empty(), "{:?}", lint(&corpus));
    }

    #[test]
    fn levels_respect_parents() {
        let corpus = Corpus::builtin();
        let levels = corpus.levels().unwrap();
        let depth = |id: &str| levels.iter().position(|l| l.iter().any(|r| r.id == id)).unwrap();
        for row in corpus.rows() {
            for p in row.kind.parents() {
                assert!(depth(p) < depth(&row.id), "{} before {}", p, row.id);
            }
        }
        assert_eq!(depth("L9"), depth("K2") + 1);
    }

    #[test]
    fn cycles_and_dangling_parents_rejected() {
        let cyc = "X neighbour F2 Y 11 ; 68 34 12 - - - 1 known\nY neighbour F2 X 11 ; 68 34 12 - - - 1 known";
        assert!(cyc.parse::<Corpus>().is_err());
        let dangling = "X neighbour F2 Z 11 ; 68 34 12 - - - 1 known";
        assert!(matches!(dangling.parse::<Corpus>(), Err(Error::UnknownRow(_))));
    }

    #[test]
    fn restrict_pulls_in_ancestors() {
        let corpus = Corpus::builtin().restrict(&["H1"]).unwrap();
        let ids: Vec<&str> = corpus.rows().iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["E2", "F7", "G5", "H1"]);
        assert!(Corpus::builtin().restrict(&["Z9"]).is_err());
        assert!(Corpus::default().levels().unwrap().is_empty());
    }

    #[test]
    fn lint_catches_inconsistent_rows() {
        let bad = "X construction F2 C17 natural 0 0 0 ; 68 34 12 W64_1 -500 3 1 known";
        let corpus: Corpus = bad.parse().unwrap();
        let issues = lint(&corpus);
        assert!(issues.iter().any(|i| i.message.contains("does not apply")));
        assert!(issues.iter().any(|i| i.message.contains("seed lengths")));
    }

    #[test]
    fn expectation_matching() {
        let e = Expected { n: 68, k: 34, d: 12, form: Some(EnumeratorForm::W68_2), beta: Some(61), gamma: Some(2), aut: "2".into() };
        let p = EnumeratorParams { form: EnumeratorForm::W68_2, beta: 61, gamma: Some(2) };
        assert!(e.matches(68, 34, Some(12), Some(&p)));
        assert!(!e.matches(68, 34, Some(10), Some(&p)));
        assert!(!e.matches(68, 34, Some(12), Some(&EnumeratorParams { gamma: Some(1), ..p })));
        assert!(!e.matches(68, 34, Some(12), None));
    }
}
