//! Bundled reference sequences and the verification engine.
//!
//! Each table is a plain text file under `data/`, one `n<TAB>value` line per
//! size, so it can be diffed against the published listings it was
//! transcribed from.

use std::fmt;

use num_bigint::BigUint;

use crate::count::Counter;
use crate::error::{Error, Result};
use crate::term::{Family, Kind, SizeModel, TermClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceTable {
    pub kind: Kind,
    pub values: Vec<BigUint>,
    pub provenance: &'static str,
}

struct Source {
    kind: Kind,
    file: &'static str,
    text: &'static str,
    provenance: &'static str,
}

const fn kind(family: Family, model: SizeModel, class: TermClass) -> Kind {
    Kind::new(family, model, class)
}

const SOURCES: &[Source] = &[
    Source {
        kind: kind(Family::Linear, SizeModel::Natural, TermClass::All),
        file: "linear_natural_all.tsv",
        text: include_str!("../data/linear_natural_all.tsv"),
        provenance: "published table of closed linear terms, natural size 0..100",
    },
    Source {
        kind: kind(Family::Affine, SizeModel::Natural, TermClass::All),
        file: "affine_natural_all.tsv",
        text: include_str!("../data/affine_natural_all.tsv"),
        provenance: "published table of closed affine terms, natural size 0..100",
    },
    Source {
        kind: kind(Family::Affine, SizeModel::Natural, TermClass::Normal),
        file: "affine_natural_nf.tsv",
        text: include_str!("../data/affine_natural_nf.tsv"),
        provenance: "published table of closed affine normal forms, natural size 0..80",
    },
    Source {
        kind: kind(Family::Linear, SizeModel::Var0, TermClass::All),
        file: "linear_var0_all.tsv",
        text: include_str!("../data/linear_var0_all.tsv"),
        provenance: "closed linear terms, variable size 0; OEIS A062980 interleaved with zeros",
    },
    Source {
        kind: kind(Family::Linear, SizeModel::Var1, TermClass::All),
        file: "linear_var1_all.tsv",
        text: include_str!("../data/linear_var1_all.tsv"),
        provenance: "closed linear terms, variable size 1; OEIS A062980 at sizes 3k+2, zero elsewhere",
    },
    Source {
        kind: kind(Family::Affine, SizeModel::Var0, TermClass::All),
        file: "affine_var0_all.tsv",
        text: include_str!("../data/affine_var0_all.tsv"),
        provenance: "closed affine terms, variable size 0; published prefix",
    },
    Source {
        kind: kind(Family::Affine, SizeModel::Var1, TermClass::All),
        file: "affine_var1_all.tsv",
        text: include_str!("../data/affine_var1_all.tsv"),
        provenance: "closed affine terms, variable size 1; OEIS A281270",
    },
    Source {
        kind: kind(Family::Linear, SizeModel::Var0, TermClass::Normal),
        file: "linear_var0_nf.tsv",
        text: include_str!("../data/linear_var0_nf.tsv"),
        provenance: "closed linear normal forms, variable size 0; published prefix",
    },
];

/// Parses the `n<TAB>value` format. Sizes must run 0, 1, 2, ... in order.
pub fn parse_table(name: &str, text: &str) -> Result<Vec<BigUint>> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let bad = |message: &str| Error::ReferenceData {
            table: name.to_owned(),
            line: i + 1,
            message: message.to_owned(),
        };
        let (n, value) = line.split_once('\t').ok_or_else(|| bad("expected n<TAB>value"))?;
        let n: usize = n.trim().parse().map_err(|_| bad("bad size"))?;
        if n != values.len() {
            return Err(bad("sizes out of order"));
        }
        let value = value
            .trim()
            .parse::<BigUint>()
            .map_err(|_| bad("bad value"))?;
        values.push(value);
    }
    Ok(values)
}

/// Every bundled table.
pub fn tables() -> Vec<ReferenceTable> {
    SOURCES
        .iter()
        .map(|s| ReferenceTable {
            kind: s.kind,
            values: parse_table(s.file, s.text).expect("bundled tables are well formed"),
            provenance: s.provenance,
        })
        .collect()
}

pub fn reference(kind: Kind) -> Result<ReferenceTable> {
    tables()
        .into_iter()
        .find(|t| t.kind == kind)
        .ok_or(Error::NoTable(kind))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail {
        index: usize,
        expected: BigUint,
        actual: BigUint,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub kind: Kind,
    /// Largest size compared.
    pub upto: usize,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.outcome == Outcome::Pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match &e.outcome {
                Outcome::Pass => writeln!(f, "{}\tPASS", e.kind)?,
                Outcome::Fail { index, .. } => writeln!(f, "{}\tFAIL@{index}", e.kind)?,
            }
        }
        Ok(())
    }
}

/// Compares the computed series against `tables` up to `max_n` (or the
/// table length, whichever is smaller).
pub fn verify_tables(counter: &mut Counter, tables: &[ReferenceTable], max_n: usize) -> Report {
    let entries = tables
        .iter()
        .filter(|t| !t.values.is_empty())
        .map(|t| {
            let upto = max_n.min(t.values.len() - 1);
            let computed = counter.series(t.kind, upto);
            let outcome = t
                .values
                .iter()
                .zip(computed)
                .enumerate()
                .find(|(_, (expected, actual))| *expected != actual)
                .map_or(Outcome::Pass, |(index, (expected, actual))| Outcome::Fail {
                    index,
                    expected: expected.clone(),
                    actual,
                });
            ReportEntry {
                kind: t.kind,
                upto,
                outcome,
            }
        })
        .collect();
    Report { entries }
}

/// Checks every bundled table up to `max_n`.
pub fn verify(max_n: usize) -> Report {
    crate::count::with_counter(|c| verify_tables(c, &tables(), max_n))
}
