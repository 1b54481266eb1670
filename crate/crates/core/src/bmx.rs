//! The `.bmx` text format.
//!
//! ```text
//! # optional comment lines
//! matroid fano
//! rank 3
//! elements p1 p2 p3 p4 p5 p6 p7
//! row 1001011
//! row 0101101
//! row 0010111
//! ```
//!
//! Exactly `rank` rows follow the `elements` line and their rank must equal
//! the declared rank. Comment lines start with `#`. Files are ASCII with LF
//! line endings.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf2::{bits_to_string, parse_bits, rref, BitMatrix};
use crate::matroid::BinaryMatroid;

/// A named matroid as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidFile {
    pub name: String,
    pub matroid: BinaryMatroid,
}

impl MatroidFile {
    pub fn new(name: impl Into<String>, matroid: BinaryMatroid) -> Self {
        MatroidFile { name: name.into(), matroid }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().run(text)
    }

    pub fn emit(&self) -> Result<String> {
        emit_matroid(&self.name, &self.matroid)
    }
}

pub fn parse_matroid(text: &str) -> Result<BinaryMatroid> {
    MatroidFile::parse(text).map(|f| f.matroid)
}

/// Writes `m` under `name`. A representation that is not of full row rank is
/// written as the nonzero rows of its reduced echelon form.
pub fn emit_matroid(name: &str, m: &BinaryMatroid) -> Result<String> {
    check_token(name, "matroid name")?;
    for l in m.labels() {
        check_token(l, "element label")?;
    }
    let rep = m.rep();
    let rows: Vec<u64> =
        if rep.rows() == m.rank() { rep.row_words().to_vec() } else { rref(rep).0.row_words()[..m.rank()].to_vec() };
    let mut out = format!("matroid {name}\nrank {}\nelements", m.rank());
    for l in m.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for r in rows {
        out.push_str("row ");
        out.push_str(&bits_to_string(r, m.len()));
        out.push('\n');
    }
    Ok(out)
}

fn check_token(s: &str, what: &str) -> Result<()> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_graphic()) || s.starts_with('#') {
        return Err(Error::Parse { line: 0, message: format!("{what} `{s}` is not a printable ASCII token") });
    }
    Ok(())
}

#[derive(Default)]
struct Parser {
    name: Option<String>,
    rank: Option<usize>,
    labels: Option<Vec<String>>,
    rows: Vec<u64>,
}

impl Parser {
    fn run(mut self, text: &str) -> Result<MatroidFile> {
        let mut last = 0;
        for (i, raw) in text.split('\n').enumerate() {
            let line = i + 1;
            if !raw.is_ascii() {
                return Err(err(line, "non-ASCII character"));
            }
            if raw.contains('\r') {
                return Err(err(line, "carriage return; lines must end with LF"));
            }
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            last = line;
            self.line(line, trimmed)?;
        }
        self.finish(last)
    }

    fn line(&mut self, line: usize, text: &str) -> Result<()> {
        let (key, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match key {
            "matroid" if self.name.is_none() => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(err(line, "expected `matroid <name>`"));
                }
                self.name = Some(rest.to_string());
            }
            "rank" if self.name.is_some() && self.rank.is_none() => {
                let r = rest.parse().map_err(|_| err(line, format!("invalid rank `{rest}`")))?;
                self.rank = Some(r);
            }
            "elements" if self.rank.is_some() && self.labels.is_none() => {
                let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                let mut seen = HashSet::new();
                for l in &labels {
                    if !seen.insert(l) {
                        return Err(err(line, format!("duplicate element label `{l}`")));
                    }
                }
                if labels.len() > 64 {
                    return Err(err(line, format!("{} elements exceed the limit of 64", labels.len())));
                }
                self.labels = Some(labels);
            }
            "row" if self.labels.is_some() => {
                let n = self.labels.as_ref().map_or(0, Vec::len);
                let index = self.rows.len() + 1;
                if rest.len() != n {
                    return Err(err(line, format!("row {index} has length {}, expected {n}", rest.len())));
                }
                let bits = parse_bits(rest)
                    .ok_or_else(|| err(line, format!("row {index} contains characters other than 0 and 1")))?;
                if Some(self.rows.len()) == self.rank {
                    return Err(err(line, format!("row {index} exceeds the declared rank")));
                }
                self.rows.push(bits);
            }
            _ => {
                let expected = match (&self.name, self.rank, &self.labels) {
                    (None, _, _) => "`matroid <name>`",
                    (_, None, _) => "`rank <r>`",
                    (_, _, None) => "`elements <label> ...`",
                    _ => "`row <bits>`",
                };
                return Err(err(line, format!("unexpected `{key}`, expected {expected}")));
            }
        }
        Ok(())
    }

    fn finish(self, last: usize) -> Result<MatroidFile> {
        let (Some(name), Some(rank), Some(labels)) = (self.name, self.rank, self.labels) else {
            return Err(err(last.max(1), "incomplete header"));
        };
        if self.rows.len() != rank {
            return Err(err(last.max(1), format!("{} rows given for rank {rank}", self.rows.len())));
        }
        if rank > 64 {
            return Err(err(2, format!("rank {rank} exceeds the limit of 64")));
        }
        let rep = BitMatrix::from_rows(labels.len(), self.rows)?;
        let actual = rep.rank();
        if actual != rank {
            return Err(err(last.max(1), format!("rows have rank {actual}, declared rank {rank}")));
        }
        Ok(MatroidFile { name, matroid: BinaryMatroid::new(labels, rep)? })
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    #[test]
    fn fano_round_trip() {
        let f = construct(&FamilySpec::Fano).unwrap();
        let text = emit_matroid("fano", &f).unwrap();
        assert_eq!(text.lines().count(), 6);
        let back = MatroidFile::parse(&text).unwrap();
        assert_eq!(back.name, "fano");
        assert_eq!(back.matroid, f);
        assert_eq!(back.emit().unwrap(), text);
    }

    #[test]
    fn biwheel_plus_block_layout() {
        let m = construct(&FamilySpec::BiwheelPlus(4)).unwrap();
        let text = emit_matroid("d4", &m).unwrap();
        let rows: Vec<&str> = text.lines().filter_map(|l| l.strip_prefix("row ")).collect();
        assert_eq!(rows, ["1000011110000", "0100010001001", "0010001001100", "0001000100110", "0000100010011"]);
        assert!(text.contains("elements z x2 x3 x4 x5 s1 s2 s3 s4 t1 t2 t3 t4\n"));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# header\nmatroid u23\n\nrank 2\n# labels\nelements a b c\nrow 101\nrow 011\n";
        let m = parse_matroid(text).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.rank(), 2);
    }

    fn parse_err(text: &str) -> (usize, String) {
        match parse_matroid(text) {
            Err(Error::Parse { line, message }) => (line, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn wrong_row_length_names_the_row() {
        let (line, msg) = parse_err("matroid m\nrank 2\nelements a b c\nrow 101\nrow 01\n");
        assert_eq!(line, 5);
        assert!(msg.contains("row 2"), "{msg}");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_err("matroid m\nrank 1\nelements a a\nrow 11\n").0, 3);
        assert_eq!(parse_err("matroid m\nrank 1\nelements a b\nrow 1x\n").0, 4);
        assert_eq!(parse_err("rank 1\n").0, 1);
        assert_eq!(parse_err("matroid m\r\nrank 1\n").0, 1);
        assert_eq!(parse_err("matroid m\nrank 2\nelements a b\nrow 11\nrow 11\n").0, 5);
        assert_eq!(parse_err("matroid m\nrank 2\nelements a b\nrow 11\n").0, 4);
        assert_eq!(parse_err("matroid m\nrank 1\nelements a b\nrow 11\nrow 01\n").0, 5);
        assert_eq!(parse_err("matroid m\nrank 1\nelements é\nrow 1\n").0, 3);
    }

    #[test]
    fn rank_deficient_representation_is_reduced() {
        let rep = BitMatrix::from_bit_strings(&["110", "110", "011"]).unwrap();
        let m = BinaryMatroid::from_matrix(rep).unwrap();
        let text = emit_matroid("m", &m).unwrap();
        let back = parse_matroid(&text).unwrap();
        assert_eq!(back.rank(), 2);
        assert!(back.same_matroid(&m));
    }
}
