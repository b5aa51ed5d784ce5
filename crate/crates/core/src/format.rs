//! Plain-text code files.
//!
//! ```text
//! # comment
//! n=2 fmt=paulivec ebits=1 construction=single
//! 1+D^3, 1+D^2, D+D^2 | D^2, D, 1
//! ```
//!
//! The header names the number of noisy qubits per frame and the body
//! format. `paulivec` lines hold `n + ebits` polynomials on each side of
//! the bar. `gf4` lines list frames separated by `;`, each frame `n`
//! symbols from `0 1 w W` (`w` is ω, `W` is ω̄). `binary` lines are parity
//! rows of `n` polynomials, optionally prefixed `z:` or `x:`; an unprefixed
//! row is used both as a z row and as an x row.

use crate::builder::{import_gf4, Construction, GeneratorSet, Gf4, Gf4Generator};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::pauli::PauliVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    PauliVec,
    Gf4,
    Binary,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::PauliVec => "paulivec",
            Format::Gf4 => "gf4",
            Format::Binary => "binary",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub n: usize,
    pub format: Format,
    pub ebits: usize,
    pub construction: Construction,
}

/// Parsed body of a code file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeFile {
    Paulis(GeneratorSet),
    Gf4 {
        n: usize,
        gens: Vec<Gf4Generator>,
    },
    Binary {
        n: usize,
        z_rows: Vec<Vec<LaurentPoly>>,
        x_rows: Vec<Vec<LaurentPoly>>,
    },
}

impl CodeFile {
    /// Pauli generators before any augmentation. Binary rows become pure
    /// z rows followed by pure x rows.
    pub fn pauli_vecs(&self) -> Vec<PauliVec> {
        match self {
            CodeFile::Paulis(g) => g.gens().to_vec(),
            CodeFile::Gf4 { gens, .. } => gens.iter().flat_map(import_gf4).collect(),
            CodeFile::Binary { n, z_rows, x_rows } => {
                let zero = vec![LaurentPoly::zero(); *n];
                z_rows
                    .iter()
                    .map(|r| PauliVec::new(r.clone(), zero.clone()))
                    .chain(
                        x_rows
                            .iter()
                            .map(|r| PauliVec::new(zero.clone(), r.clone())),
                    )
                    .collect::<Result<_>>()
                    .expect("rows have n entries")
            }
        }
    }

    /// Generator set as written (paulivec) or as imported, without new columns.
    pub fn generator_set(&self) -> Result<GeneratorSet> {
        match self {
            CodeFile::Paulis(g) => Ok(g.clone()),
            _ => GeneratorSet::unassisted(self.pauli_vecs()),
        }
    }
}

/// Options that change how a file is read.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReadOptions {
    /// Accept `binary` files, whose rows feed the CSS construction.
    pub css: bool,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim_end()))
        .filter(|(_, l)| !l.trim().is_empty())
}

fn parse_header(line: usize, text: &str) -> Result<Header> {
    let mut n = None;
    let mut format = None;
    let mut ebits = 0;
    let mut construction = None;
    let mut col = 1;
    for tok in text.split_whitespace() {
        col = text[col - 1..].find(tok).map_or(col, |i| col + i);
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::parse(line, col, format!("expected key=value, got `{tok}`")))?;
        let bad = |what: &str| Error::parse(line, col, format!("bad {what} `{value}`"));
        match key {
            "n" => n = Some(value.parse::<usize>().map_err(|_| bad("n"))?),
            "ebits" => ebits = value.parse().map_err(|_| bad("ebits"))?,
            "fmt" => {
                format = Some(match value {
                    "paulivec" => Format::PauliVec,
                    "gf4" => Format::Gf4,
                    "binary" => Format::Binary,
                    _ => return Err(bad("format")),
                })
            }
            "construction" => construction = Some(value.parse().map_err(|_| bad("construction"))?),
            _ => {
                return Err(Error::parse(
                    line,
                    col,
                    format!("unknown header key `{key}`"),
                ))
            }
        }
        col += tok.len();
    }
    let n = n
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::parse(line, 1, "header needs n=<positive int>"))?;
    let format =
        format.ok_or_else(|| Error::parse(line, 1, "header needs fmt=<paulivec|gf4|binary>"))?;
    if format != Format::PauliVec && (ebits != 0 || construction.is_some()) {
        return Err(Error::parse(
            line,
            1,
            "ebits and construction apply to paulivec files only",
        ));
    }
    let construction = construction.unwrap_or(if ebits == 0 {
        Construction::Unassisted
    } else {
        Construction::MultiLower
    });
    Ok(Header {
        n,
        format,
        ebits,
        construction,
    })
}

/// Splits on `sep`, returning each piece with its 1-based column.
fn split_cols(s: &str, sep: char, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        if c == sep {
            out.push((base + start, &s[start..i]));
            start = i + c.len_utf8();
        }
    }
    out.push((base + start, &s[start..]));
    out
}

fn parse_polys(line: usize, s: &str, base: usize, expect: usize) -> Result<Vec<LaurentPoly>> {
    let parts = split_cols(s, ',', base);
    if parts.len() != expect {
        return Err(Error::parse(
            line,
            base,
            format!("expected {expect} entries, found {}", parts.len()),
        ));
    }
    parts
        .into_iter()
        .map(|(col, p)| LaurentPoly::parse_at(p, line, col))
        .collect()
}

fn parse_paulivec_line(line: usize, s: &str, width: usize) -> Result<PauliVec> {
    let sides = split_cols(s, '|', 1);
    let [(zc, zs), (xc, xs)] = sides[..] else {
        return Err(Error::parse(line, 1, "expected exactly one `|`"));
    };
    PauliVec::new(
        parse_polys(line, zs, zc, width)?,
        parse_polys(line, xs, xc, width)?,
    )
}

fn parse_gf4_line(line: usize, s: &str, n: usize) -> Result<Gf4Generator> {
    let mut frames = Vec::new();
    for (col, part) in split_cols(s, ';', 1) {
        let mut frame = Vec::new();
        for (i, c) in part.char_indices().filter(|(_, c)| !c.is_whitespace()) {
            frame.push(Gf4::from_symbol(c).ok_or_else(|| {
                Error::parse(
                    line,
                    col + i,
                    format!("`{c}` is not a GF(4) symbol (0, 1, w, W)"),
                )
            })?);
        }
        if frame.len() != n {
            return Err(Error::parse(
                line,
                col,
                format!("frame has {} symbols, expected {n}", frame.len()),
            ));
        }
        frames.push(frame);
    }
    Gf4Generator::from_frames(&frames)
}

/// Parses a code file.
pub fn read_code(text: &str, opts: ReadOptions) -> Result<CodeFile> {
    let mut lines = content_lines(text);
    let (hline, htext) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "no generators"))?;
    let header = parse_header(hline, htext)?;
    let n = header.n;
    let body: Vec<(usize, &str)> = lines.collect();
    if body.is_empty() {
        return Err(Error::parse(hline + 1, 1, "no generators"));
    }
    match header.format {
        Format::PauliVec => {
            let gens = body
                .iter()
                .map(|&(l, s)| parse_paulivec_line(l, s, n + header.ebits))
                .collect::<Result<Vec<_>>>()?;
            let g = GeneratorSet::new(n, header.ebits, gens, header.construction)
                .map_err(|e| Error::parse(body[0].0, 1, e.to_string()))?;
            Ok(CodeFile::Paulis(g))
        }
        Format::Gf4 => Ok(CodeFile::Gf4 {
            n,
            gens: body
                .iter()
                .map(|&(l, s)| parse_gf4_line(l, s, n))
                .collect::<Result<_>>()?,
        }),
        Format::Binary => {
            if !opts.css {
                return Err(Error::parse(
                    hline,
                    1,
                    "binary parity rows are only read for the CSS construction",
                ));
            }
            let mut z_rows = Vec::new();
            let mut x_rows = Vec::new();
            for &(l, s) in &body {
                let t = s.trim_start();
                let base = s.len() - t.len() + 1;
                if let Some(rest) = t.strip_prefix("z:") {
                    z_rows.push(parse_polys(l, rest, base + 2, n)?);
                } else if let Some(rest) = t.strip_prefix("x:") {
                    x_rows.push(parse_polys(l, rest, base + 2, n)?);
                } else {
                    let row = parse_polys(l, t, base, n)?;
                    z_rows.push(row.clone());
                    x_rows.push(row);
                }
            }
            Ok(CodeFile::Binary { n, z_rows, x_rows })
        }
    }
}

/// Canonical paulivec text for a generator set.
pub fn write_paulivec(g: &GeneratorSet) -> String {
    let mut out = format!("n={} fmt=paulivec", g.n());
    if g.ebits() > 0 {
        out.push_str(&format!(" ebits={}", g.ebits()));
    }
    if g.construction() != Construction::Unassisted {
        out.push_str(&format!(" construction={}", g.construction()));
    }
    out.push('\n');
    for u in g.gens() {
        out.push_str(&u.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builder::augment_single;

    #[test]
    fn gf4_file() {
        let f = read_code(
            "# quaternary\nn=4 fmt=gf4\n1 W 1 0 ; 1 1 0 1\n",
            ReadOptions::default(),
        )
        .unwrap();
        let vs = f.pauli_vecs();
        assert_eq!(vs.len(), 2);
        assert_eq!(vs[0].to_window(0, 1).to_string(), "ZXZI|ZZIZ");
        assert_eq!(vs[1].to_window(0, 1).to_string(), "XYXI|XXIX");
    }

    #[test]
    fn bad_gf4_symbol_located() {
        let err = read_code("n=2 fmt=gf4\n1 q\n", ReadOptions::default()).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn binary_needs_css() {
        let text = "n=3 fmt=binary\n1+D, D, 1\n";
        assert!(read_code(text, ReadOptions::default()).is_err());
        let f = read_code(text, ReadOptions { css: true }).unwrap();
        let vs = f.pauli_vecs();
        assert_eq!(vs.len(), 2);
        assert_eq!(vs[0].to_string(), "1+D, D, 1 | 0, 0, 0");
        assert_eq!(vs[1].to_string(), "0, 0, 0 | 1+D, D, 1");
    }

    #[test]
    fn empty_files_rejected() {
        for text in ["", "# only a comment\n", "n=2 fmt=paulivec\n"] {
            let err = read_code(text, ReadOptions::default()).unwrap_err();
            assert!(err.to_string().contains("no generators"), "{err}");
        }
    }

    #[test]
    fn paulivec_round_trip() {
        let text = "n=2 fmt=paulivec\n1+D^3, 1+D^2 | D^2, D\n";
        let f = read_code(text, ReadOptions::default()).unwrap();
        let g = augment_single(&f.pauli_vecs()[0]).unwrap();
        let written = write_paulivec(&g);
        assert_eq!(
            written,
            "n=2 fmt=paulivec ebits=1 construction=single\n1+D^3, 1+D^2, D+D^2 | D^2, D, 1\n"
        );
        let back = read_code(&written, ReadOptions::default()).unwrap();
        assert_eq!(back, CodeFile::Paulis(g));
    }

    #[test]
    fn entry_count_and_polynomial_errors() {
        let err = read_code("n=2 fmt=paulivec\n1 | 1, D\n", ReadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = read_code("n=1 fmt=paulivec\n1 | D+D\n", ReadOptions::default()).unwrap_err();
        assert!(
            matches!(
                err,
                Error::Parse {
                    line: 2,
                    column: 4,
                    ..
                }
            ),
            "{err}"
        );
        let err = read_code("n=1 fmt=bogus\n1 | 1\n", ReadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }
}
