//! Corpus data files: one entry per file.
//!
//! ```text
//! # comments anywhere
//! name: twisted_cubic
//! n: 3
//! prime: 32003
//! seed: 0
//! tags: integral codim2 hypothesis
//! gens:
//! -x1^2 + x0*x2
//! ...
//! expect:
//! gin: x0^2, x0*x1, x1^2
//! s_Z: 2
//! s_Gamma: 2
//! lambda: 2 1
//! ```

use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use monoinv_core::corpus::{CorpusEntry, Expected, Tags};
use monoinv_core::{Ideal, Monomial, PrimeField, Ring};

use crate::parse::{parse_generators, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Format { path: PathBuf, line: usize, message: String },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

#[derive(Clone, Debug)]
pub struct CorpusFile {
    pub entry: CorpusEntry,
    pub prime: u32,
    /// Comment lines written above the header.
    pub comments: Vec<String>,
}

fn parse_tags(s: &str) -> Result<Tags, String> {
    let mut t = Tags::default();
    for w in s.split_whitespace() {
        match w {
            "integral" => t.integral = true,
            "codim2" => t.codim2 = true,
            "hypothesis" => t.satisfies_hypothesis = true,
            other => return Err(format!("unknown tag {other}")),
        }
    }
    Ok(t)
}

fn render_tags(t: &Tags) -> String {
    let mut v = Vec::new();
    if t.integral {
        v.push("integral");
    }
    if t.codim2 {
        v.push("codim2");
    }
    if t.satisfies_hypothesis {
        v.push("hypothesis");
    }
    v.join(" ")
}

fn monomial_of(p: &monoinv_core::Polynomial) -> Option<Monomial> {
    match p.terms() {
        [t] => Some(t.mono),
        _ => None,
    }
}

impl CorpusFile {
    pub fn parse(text: &str, path: &Path) -> Result<CorpusFile, FileError> {
        let fail = |line: usize, message: String| FileError::Format { path: path.into(), line, message };
        let mut comments = Vec::new();
        let (mut name, mut n, mut prime, mut seed, mut tags) = (None, None, None, 0u64, Tags::default());
        let mut gens_text = String::new();
        let mut gens_line = 0;
        let mut expect_lines: Vec<(usize, String, String)> = Vec::new();
        #[derive(PartialEq)]
        enum Section {
            Header,
            Gens,
            Expect,
        }
        let mut section = Section::Header;
        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            let trimmed = raw.trim();
            if let Some(c) = trimmed.strip_prefix('#') {
                if section == Section::Header {
                    comments.push(c.trim().to_string());
                }
                gens_text.push('\n');
                continue;
            }
            if trimmed == "gens:" {
                section = Section::Gens;
                gens_line = ln;
                gens_text.push('\n');
                continue;
            }
            if trimmed == "expect:" {
                section = Section::Expect;
                continue;
            }
            match section {
                Section::Gens => {
                    gens_text.push_str(raw);
                    gens_text.push('\n');
                }
                Section::Header | Section::Expect => {
                    gens_text.push('\n');
                    if trimmed.is_empty() {
                        continue;
                    }
                    let (key, value) = trimmed.split_once(':').ok_or_else(|| fail(ln, format!("expected 'key: value', found {trimmed:?}")))?;
                    let (key, value) = (key.trim(), value.trim());
                    if section == Section::Expect {
                        expect_lines.push((ln, key.to_string(), value.to_string()));
                        continue;
                    }
                    let num = |v: &str| v.parse::<u64>().map_err(|_| fail(ln, format!("invalid number {v:?}")));
                    match key {
                        "name" => name = Some(value.to_string()),
                        "n" => n = Some(num(value)? as usize),
                        "prime" => prime = Some(num(value)? as u32),
                        "seed" => seed = num(value)?,
                        "tags" => tags = parse_tags(value).map_err(|m| fail(ln, m))?,
                        other => return Err(fail(ln, format!("unknown header {other:?}"))),
                    }
                }
            }
        }
        let name = name.ok_or_else(|| fail(1, "missing 'name:'".into()))?;
        let n = n.ok_or_else(|| fail(1, "missing 'n:'".into()))?;
        let prime = prime.unwrap_or(monoinv_core::DEFAULT_PRIME);
        if gens_line == 0 {
            return Err(fail(1, "missing 'gens:'".into()));
        }
        let field = PrimeField::new(prime).map_err(|e| fail(1, e.to_string()))?;
        let ring = Ring::projective(field, n).map_err(|e| fail(1, e.to_string()))?;
        let parse_err = |source| FileError::Parse { path: path.into(), source };
        let gens = parse_generators(&gens_text, field, ring.nvars()).map_err(parse_err)?;
        let ideal = Ideal::new(ring, gens).map_err(|e| fail(gens_line, e.to_string()))?;

        let mut expected = Expected::default();
        for (ln, key, value) in expect_lines {
            let nums = |v: &str| {
                v.split_whitespace()
                    .map(|w| w.parse::<u32>().map_err(|_| fail(ln, format!("invalid number {w:?}"))))
                    .collect::<Result<Vec<u32>, _>>()
            };
            match key.as_str() {
                "gin" => {
                    let line_offset = "\n".repeat(ln - 1);
                    let polys = parse_generators(&format!("{line_offset}{value}"), field, ring.nvars()).map_err(parse_err)?;
                    let monos = polys
                        .iter()
                        .map(monomial_of)
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| fail(ln, "expected gin must be monomial".into()))?;
                    expected.gin = Some(monos);
                }
                "s_Z" => expected.s_z = Some(single(nums(&value)?, ln, &fail)?),
                "s_Gamma" => expected.s_gamma = Some(single(nums(&value)?, ln, &fail)?),
                "lambda" => expected.stable_lambdas = Some(nums(&value)?),
                other => return Err(fail(ln, format!("unknown expectation {other:?}"))),
            }
        }
        Ok(CorpusFile { entry: CorpusEntry { name, n, seed, ideal, tags, expected }, prime, comments })
    }

    pub fn read(path: &Path) -> Result<CorpusFile, FileError> {
        let text = std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.into(), source })?;
        CorpusFile::parse(&text, path)
    }

    pub fn write(&self, path: &Path) -> Result<(), FileError> {
        std::fs::write(path, self.to_string()).map_err(|source| FileError::Io { path: path.into(), source })
    }
}

fn single(v: Vec<u32>, ln: usize, fail: &impl Fn(usize, String) -> FileError) -> Result<u32, FileError> {
    match v[..] {
        [x] => Ok(x),
        _ => Err(fail(ln, "expected one number".into())),
    }
}

impl fmt::Display for CorpusFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entry;
        for c in &self.comments {
            writeln!(f, "# {c}")?;
        }
        writeln!(f, "name: {}", e.name)?;
        writeln!(f, "n: {}", e.n)?;
        writeln!(f, "prime: {}", self.prime)?;
        writeln!(f, "seed: {}", e.seed)?;
        writeln!(f, "tags: {}", render_tags(&e.tags))?;
        writeln!(f, "gens:")?;
        for g in e.ideal.generators() {
            writeln!(f, "{g}")?;
        }
        let x = &e.expected;
        if x == &Expected::default() {
            return Ok(());
        }
        writeln!(f, "expect:")?;
        if let Some(g) = &x.gin {
            let mut s = String::new();
            for (i, m) in g.iter().enumerate() {
                if i > 0 {
                    s.push_str(", ");
                }
                write!(s, "{m}")?;
            }
            writeln!(f, "gin: {s}")?;
        }
        if let Some(v) = x.s_z {
            writeln!(f, "s_Z: {v}")?;
        }
        if let Some(v) = x.s_gamma {
            writeln!(f, "s_Gamma: {v}")?;
        }
        if let Some(l) = &x.stable_lambdas {
            let l: Vec<String> = l.iter().map(u32::to_string).collect();
            writeln!(f, "lambda: {}", l.join(" "))?;
        }
        Ok(())
    }
}

/// All `*.ideal` files of a directory, sorted by file name.
pub fn read_dir(dir: &Path) -> Result<Vec<CorpusFile>, FileError> {
    let io = |source| FileError::Io { path: dir.into(), source };
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| p.extension().is_some_and(|x| x == "ideal"));
    paths.sort();
    paths.iter().map(|p| CorpusFile::read(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TEXT: &str = "# sample\nname: tc\nn: 3\nprime: 32003\nseed: 0\ntags: integral codim2 hypothesis\ngens:\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\nexpect:\ngin: x0^2, x0*x1, x1^2\ns_Z: 2\ns_Gamma: 2\nlambda: 2 1\n";

    #[test]
    fn round_trip() {
        let f = CorpusFile::parse(TEXT, Path::new("tc.ideal")).unwrap();
        assert_eq!(f.entry.name, "tc");
        assert_eq!(f.entry.ideal.generators().len(), 3);
        assert_eq!(f.entry.expected.stable_lambdas, Some(vec![2, 1]));
        assert!(f.entry.tags.satisfies_hypothesis);
        let again = CorpusFile::parse(&f.to_string(), Path::new("tc.ideal")).unwrap();
        assert_eq!(again.to_string(), f.to_string());
        assert_eq!(again.entry.ideal, f.entry.ideal);
    }

    #[test]
    fn errors_carry_lines() {
        let bad = TEXT.replace("x1*x3 - x2^2", "x1*x3 - x2");
        match CorpusFile::parse(&bad, Path::new("bad.ideal")).unwrap_err() {
            FileError::Parse { source, .. } => assert_eq!(source.line, 10),
            e => panic!("{e}"),
        }
        let bad = TEXT.replace("n: 3", "n 3");
        assert!(matches!(CorpusFile::parse(&bad, Path::new("b")), Err(FileError::Format { line: 3, .. })));
    }
}
