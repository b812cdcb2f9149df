//! Machine-readable transcription of the published GF(4) code tables.
//!
//! The data file is embedded at build time. Lines look like
//! `index2 [40,9,21] degenerate clean g,f` and `#` starts a comment.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::SkewPoly;

const BUILTIN: &str = include_str!("../data/tables.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// `g` followed by `f_1..f_{l-1}`; otherwise the tuple itself.
    pub degenerate: bool,
    /// The printed row has layout problems; failures are not asserted.
    pub irregular: bool,
    pub generators: Vec<String>,
    pub line: usize,
}

impl TableRow {
    pub fn l(&self) -> usize {
        self.generators.len()
    }

    pub fn s(&self) -> usize {
        self.n / self.l().max(1)
    }

    pub fn label(&self) -> String {
        format!("{} [{},{},{}]", self.group, self.n, self.k, self.d)
    }

    /// Builds the code over GF(4).
    pub fn spec(&self) -> Result<CodeSpec> {
        self.spec_over(&Field::gf4())
    }

    pub fn spec_over(&self, field: &Field) -> Result<CodeSpec> {
        let l = self.l();
        if l == 0 || !self.n.is_multiple_of(l) {
            return Err(Error::InvalidCode(format!(
                "n = {} is not a multiple of l = {l}",
                self.n
            )));
        }
        let polys = self
            .generators
            .iter()
            .map(|g| SkewPoly::parse(field, g))
            .collect::<Result<Vec<_>>>()?;
        if self.degenerate {
            CodeSpec::from_factor(field, self.s(), &polys[0], &polys[1..])
        } else {
            CodeSpec::new(field, self.s(), polys)
        }
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{},{},{}] {} {} {}",
            self.group,
            self.n,
            self.k,
            self.d,
            if self.degenerate {
                "degenerate"
            } else {
                "nondegenerate"
            },
            if self.irregular { "irregular" } else { "clean" },
            self.generators.join(",")
        )
    }
}

/// Parses `[n,k,d]`.
pub fn parse_params(text: &str) -> Result<(usize, usize, usize)> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [n,k,d], got {text:?}")))?;
    let nums = inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad number in {text:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    match nums[..] {
        [n, k, d] => Ok((n, k, d)),
        _ => Err(Error::Parse(format!(
            "expected three parameters in {text:?}"
        ))),
    }
}

/// One parsed line, or the parse error for that line. Blank and comment
/// lines are skipped.
pub fn parse_table(text: &str) -> Vec<(usize, Result<TableRow>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap().trim();
            (!line.is_empty()).then(|| (i + 1, parse_line(line, i + 1)))
        })
        .collect()
}

fn parse_line(line: &str, lineno: usize) -> Result<TableRow> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [group, params, kind, status, gens] = fields[..] else {
        return Err(Error::Parse(format!(
            "line {lineno}: expected 5 fields, got {}",
            fields.len()
        )));
    };
    let (n, k, d) = parse_params(params)?;
    let degenerate = match kind {
        "degenerate" => true,
        "nondegenerate" => false,
        other => {
            return Err(Error::Parse(format!(
                "line {lineno}: unknown kind {other:?}"
            )))
        }
    };
    let irregular = match status {
        "clean" => false,
        "irregular" => true,
        other => {
            return Err(Error::Parse(format!(
                "line {lineno}: unknown status {other:?}"
            )))
        }
    };
    Ok(TableRow {
        group: group.to_string(),
        n,
        k,
        d,
        degenerate,
        irregular,
        generators: gens.split(',').map(str::to_string).collect(),
        line: lineno,
    })
}

/// The embedded transcription.
pub fn builtin_rows() -> Vec<TableRow> {
    parse_table(BUILTIN)
        .into_iter()
        .map(|(_, r)| r.expect("embedded table parses"))
        .collect()
}

pub fn builtin_text() -> &'static str {
    BUILTIN
}
