//! Group files: the degree on the first line, then one generator per line in
//! cycle notation. Blank lines and lines starting with `#` are ignored.
//!
//! ```text
//! # S4
//! 4
//! (1 2)
//! (1 2 3 4)
//! ```

use std::fmt;

use permgrp::{parse_cycles, FiniteGroup, ParseErrorKind, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormatErrorKind {
    MissingDegree,
    InvalidDegree(String),
    Cycle(ParseErrorKind),
}

/// A malformed group file, located by 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub kind: FormatErrorKind,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            FormatErrorKind::MissingDegree => f.write_str("expected a degree line"),
            FormatErrorKind::InvalidDegree(s) => write!(f, "invalid degree {s:?}"),
            FormatErrorKind::Cycle(kind) => match kind {
                ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected {c:?}"),
                ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of line"),
                ParseErrorKind::PointOutOfRange(p) => write!(f, "point {p} out of range"),
                ParseErrorKind::RepeatedPoint(p) => write!(f, "point {p} repeated within a cycle"),
                ParseErrorKind::InvalidNumber => f.write_str("invalid number"),
                ParseErrorKind::Degree(d) => write!(f, "invalid degree {d}"),
            },
        }
    }
}

impl std::error::Error for FormatError {}

impl GroupFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (line_no, line) = lines.next().ok_or(FormatError {
            line: text.lines().count().max(1),
            column: 1,
            kind: FormatErrorKind::MissingDegree,
        })?;
        let lead = line.len() - line.trim_start().len();
        let degree = match line.trim().parse::<usize>() {
            Ok(d) if d > 0 => d,
            _ => {
                return Err(FormatError {
                    line: line_no,
                    column: lead + 1,
                    kind: FormatErrorKind::InvalidDegree(line.trim().to_string()),
                })
            }
        };
        let mut generators = Vec::new();
        for (line_no, line) in lines {
            let lead = line.len() - line.trim_start().len();
            let p = parse_cycles(line.trim(), degree).map_err(|e| FormatError {
                line: line_no,
                column: lead + e.position + 1,
                kind: FormatErrorKind::Cycle(e.kind),
            })?;
            generators.push(p);
        }
        Ok(GroupFile { degree, generators })
    }

    pub fn enumerate(&self, cap: usize) -> Result<FiniteGroup, permgrp::Error> {
        FiniteGroup::enumerate_with_cap(self.degree, self.generators.clone(), cap)
    }
}

impl From<&FiniteGroup> for GroupFile {
    fn from(g: &FiniteGroup) -> Self {
        GroupFile { degree: g.degree(), generators: g.generators().to_vec() }
    }
}

impl fmt::Display for GroupFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.degree)?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}
