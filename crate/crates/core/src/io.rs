//! Text formats for matrices, module bundles, permutation generators and
//! subgroup words.
//!
//! ```text
//! matrix field=3^2 poly=1,0,1 rows=2 cols=2
//! 1 0
//! 0 1
//! module field=3^1 dim=2 gens=1
//! matrix field=3^1 rows=2 cols=2
//! ...
//! perm degree=3 gens=2
//! 2 1 3
//! 2 3 1
//! words count=2
//! 1 2 -1
//! 2
//! ```
//! Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::group::{Group, GroupSpec, Realization, SubgroupSpec, Word};
use crate::matrix::Matrix;
use crate::module::ModuleRep;

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines { lines, pos: 0 }
    }

    fn next(&mut self) -> Result<(usize, &'a str)> {
        let l = self.lines.get(self.pos).copied().ok_or(Error::Parse {
            line: self.lines.last().map_or(0, |l| l.0),
            msg: "unexpected end of input".into(),
        })?;
        self.pos += 1;
        Ok(l)
    }

    fn done(&self) -> bool {
        self.pos >= self.lines.len()
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn header<'a>(line: usize, text: &'a str, kind: &str) -> Result<HashMap<&'a str, &'a str>> {
    let mut parts = text.split_whitespace();
    if parts.next() != Some(kind) {
        return Err(err(line, format!("expected `{kind}` header")));
    }
    let mut map = HashMap::new();
    for kv in parts {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| err(line, format!("malformed key=value `{kv}`")))?;
        map.insert(k, v);
    }
    Ok(map)
}

fn num<T: std::str::FromStr>(line: usize, map: &HashMap<&str, &str>, key: &str) -> Result<T> {
    map.get(key)
        .ok_or_else(|| err(line, format!("missing `{key}`")))?
        .parse()
        .map_err(|_| err(line, format!("bad value for `{key}`")))
}

fn parse_field(line: usize, map: &HashMap<&str, &str>) -> Result<FieldSpec> {
    let spec = map.get("field").ok_or_else(|| err(line, "missing `field`"))?;
    let (p, k) = spec
        .split_once('^')
        .ok_or_else(|| err(line, "field must be <p>^<k>"))?;
    let p: u32 = p.parse().map_err(|_| err(line, "bad characteristic"))?;
    let k: u32 = k.parse().map_err(|_| err(line, "bad degree"))?;
    let poly = match map.get("poly") {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|c| c.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| err(line, "bad polynomial"))?,
        ),
    };
    if k > 1 && poly.is_none() {
        return Err(err(line, "extension fields must declare `poly`"));
    }
    FieldSpec::new(p, k, poly.as_deref()).map_err(|e| err(line, e.to_string()))
}

fn field_header(f: &FieldSpec) -> String {
    if f.k() == 1 {
        format!("field={}^1", f.p())
    } else {
        let poly: Vec<String> = f.poly().iter().map(|c| c.to_string()).collect();
        format!("field={}^{} poly={}", f.p(), f.k(), poly.join(","))
    }
}

fn read_matrix(lines: &mut Lines) -> Result<Matrix> {
    let (ln, text) = lines.next()?;
    let map = header(ln, text, "matrix")?;
    let field = parse_field(ln, &map)?;
    let rows: usize = num(ln, &map, "rows")?;
    let cols: usize = num(ln, &map, "cols")?;
    let mut m = Matrix::zero(&field, rows, cols);
    for i in 0..rows {
        let (ln, text) = lines.next()?;
        let vals: Vec<&str> = text.split_whitespace().collect();
        if vals.len() != cols {
            return Err(err(ln, format!("expected {cols} entries, found {}", vals.len())));
        }
        for (j, v) in vals.iter().enumerate() {
            let x: u32 = v.parse().map_err(|_| err(ln, format!("bad entry `{v}`")))?;
            if x >= field.order() {
                return Err(err(ln, format!("entry {x} outside the field")));
            }
            m.set(i, j, x as Elem);
        }
    }
    Ok(m)
}

/// Parses one matrix block.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = Lines::new(text);
    let m = read_matrix(&mut lines)?;
    if !lines.done() {
        return Err(err(lines.lines[lines.pos].0, "trailing content"));
    }
    Ok(m)
}

/// Parses consecutive matrix blocks.
pub fn parse_matrices(text: &str) -> Result<Vec<Matrix>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while !lines.done() {
        out.push(read_matrix(&mut lines)?);
    }
    Ok(out)
}

pub fn write_matrix(m: &Matrix) -> String {
    let mut s = format!(
        "matrix {} rows={} cols={}\n",
        field_header(m.field()),
        m.rows(),
        m.cols()
    );
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// Parses a module bundle. The module is attached to `group` when given,
/// otherwise to a fresh abstract group with the bundle's generator count.
pub fn parse_module(text: &str, group: Option<&Group>) -> Result<ModuleRep> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.next()?;
    let map = header(ln, head, "module")?;
    let field = parse_field(ln, &map)?;
    let dim: usize = num(ln, &map, "dim")?;
    let gens: usize = num(ln, &map, "gens")?;
    let mut mats = Vec::new();
    for _ in 0..gens {
        let at = lines.lines.get(lines.pos).map_or(ln, |l| l.0);
        let m = read_matrix(&mut lines)?;
        if m.field() != &field {
            return Err(err(at, "matrix field differs from module field"));
        }
        if m.rows() != dim || m.cols() != dim {
            return Err(err(at, "matrix shape differs from module dimension"));
        }
        mats.push(m);
    }
    if !lines.done() {
        return Err(err(lines.lines[lines.pos].0, "trailing content"));
    }
    let group = match group {
        Some(g) => {
            if g.ngens != gens {
                return Err(err(ln, "generator count differs from the group"));
            }
            g.clone()
        }
        None => GroupSpec::abstract_group("module", gens),
    };
    ModuleRep::new(&group, &field, mats).map_err(|e| err(ln, e.to_string()))
}

pub fn write_module(m: &ModuleRep) -> String {
    let mut s = format!(
        "module {} dim={} gens={}\n",
        field_header(m.field()),
        m.dim(),
        m.ngens()
    );
    for a in m.action() {
        s.push_str(&write_matrix(a));
    }
    s
}

/// Parses a permutation file (1-based images) into a group.
pub fn parse_perm_group(name: &str, text: &str) -> Result<Group> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.next()?;
    let map = header(ln, head, "perm")?;
    let degree: usize = num(ln, &map, "degree")?;
    let gens: usize = num(ln, &map, "gens")?;
    let mut perms = Vec::new();
    for _ in 0..gens {
        let (ln, text) = lines.next()?;
        let img: Vec<usize> = text
            .split_whitespace()
            .map(|v| v.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| err(ln, "bad permutation image"))?;
        if img.len() != degree || img.iter().any(|&x| x == 0 || x > degree) {
            return Err(err(ln, format!("expected {degree} images in 1..={degree}")));
        }
        perms.push(img.iter().map(|x| x - 1).collect());
    }
    if !lines.done() {
        return Err(err(lines.lines[lines.pos].0, "trailing content"));
    }
    GroupSpec::from_perms(name, degree, perms).map_err(|e| err(ln, e.to_string()))
}

pub fn write_perm_group(g: &GroupSpec) -> Result<String> {
    match &g.realization {
        Some(Realization::Perms { degree, gens }) => {
            let mut s = format!("perm degree={} gens={}\n", degree, gens.len());
            for p in gens {
                let img: Vec<String> = p.iter().map(|x| (x + 1).to_string()).collect();
                s.push_str(&img.join(" "));
                s.push('\n');
            }
            Ok(s)
        }
        _ => Err(Error::NoRealization),
    }
}

/// Parses subgroup words: signed 1-based generator indices, `-i` meaning
/// the inverse of generator `i`.
pub fn parse_words(text: &str) -> Result<SubgroupSpec> {
    let mut lines = Lines::new(text);
    let (ln, head) = lines.next()?;
    let map = header(ln, head, "words")?;
    let count: usize = num(ln, &map, "count")?;
    let mut words = Vec::new();
    for _ in 0..count {
        let (ln, text) = lines.next()?;
        let w: Word = text
            .split_whitespace()
            .map(|t| {
                let v: i64 = t.parse().map_err(|_| err(ln, format!("bad letter `{t}`")))?;
                if v == 0 {
                    return Err(err(ln, "generator indices are 1-based"));
                }
                Ok(((v.unsigned_abs() - 1) as usize, v.signum() as i32))
            })
            .collect::<Result<_>>()?;
        words.push(w);
    }
    if !lines.done() {
        return Err(err(lines.lines[lines.pos].0, "trailing content"));
    }
    Ok(SubgroupSpec::new(words))
}

pub fn write_words(s: &SubgroupSpec) -> String {
    let mut out = format!("words count={}\n", s.words.len());
    for w in &s.words {
        let letters: Vec<String> = w
            .iter()
            .flat_map(|&(g, e)| {
                let letter = if e >= 0 {
                    (g as i64 + 1).to_string()
                } else {
                    (-(g as i64 + 1)).to_string()
                };
                std::iter::repeat(letter).take(e.unsigned_abs() as usize)
            })
            .collect();
        out.push_str(&letters.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip_extension_field() {
        let f = FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap();
        let m = Matrix::from_rows(&f, &[vec![0, 8, 4], vec![1, 2, 3]]).unwrap();
        let text = write_matrix(&m);
        assert!(text.starts_with("matrix field=3^2 poly=1,0,1 rows=2 cols=3\n"));
        assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    #[test]
    fn malformed_reports_line() {
        let text = "# comment\nmatrix field=3^1 rows=2 cols=2\n1 0\n0 7\n";
        assert_eq!(
            parse_matrix(text).unwrap_err(),
            Error::Parse {
                line: 4,
                msg: "entry 7 outside the field".into()
            }
        );
        let short = "matrix field=2^1 rows=1 cols=3\n1 0\n";
        assert!(matches!(parse_matrix(short), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn module_and_perm_round_trip() {
        let text = "perm degree=3 gens=2\n2 1 3\n2 3 1\n";
        let g = parse_perm_group("S3", text).unwrap();
        assert_eq!(write_perm_group(&g).unwrap(), text);
        let f = FieldSpec::prime(2).unwrap();
        let m = ModuleRep::perm_module(&g, &f).unwrap();
        let mt = write_module(&m);
        let back = parse_module(&mt, Some(&g)).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_module(&back), mt);
    }

    #[test]
    fn words_round_trip() {
        let text = "words count=2\n1 2 -1\n2\n";
        let w = parse_words(text).unwrap();
        assert_eq!(w.words[0], vec![(0, 1), (1, 1), (0, -1)]);
        assert_eq!(write_words(&w), text);
    }
}
