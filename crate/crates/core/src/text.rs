//! Line-oriented text formats for contexts, rows, matrices and certificates.
//!
//! ```text
//! rees{ring=Z, a=ideal[2]}        context
//! Zn:4[t]   Fp:2[u]               polynomial ambients
//! row [1 + 2*t, 2*t]              row file (optional `dual [..]`)
//! matrix / [..] rows / inverse    matrix file
//! cert ambient=<handle> n=2       certificate, then `E i j <poly>` lines
//! ```
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use crate::algebra::{format_row, Ambient, Mat};
use crate::cert::{ElemCert, ElemOp};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{Poly, Var};
use crate::rees::ReesCtx;
use crate::ring::RingCtx;
use crate::verify::Subject;

fn parse_err(what: &str, text: &str) -> Error {
    Error::Parse(format!("{what}: `{}`", text.trim()))
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Splits on commas outside brackets and braces.
fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' | '{' | '(' => depth += 1,
            ']' | '}' | ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn bracketed<'a>(s: &'a str, open: &str, close: &str) -> Option<&'a str> {
    s.trim().strip_prefix(open)?.strip_suffix(close)
}

pub fn parse_ring(s: &str) -> Result<RingCtx> {
    s.parse()
}

/// `ideal[g1, g2, ...]`; `ideal[]` is the zero ideal.
pub fn parse_ideal(ring: RingCtx, s: &str) -> Result<Ideal> {
    let inner = bracketed(s, "ideal[", "]").ok_or_else(|| parse_err("ideal", s))?;
    let gens = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|g| ring.parse_elem(g.trim()))
            .collect::<Result<_>>()?
    };
    Ideal::new(ring, gens)
}

/// `rees{ring=<ring>, a=<ideal>}`, keys in either order.
pub fn parse_ctx(s: &str) -> Result<ReesCtx> {
    let inner = bracketed(s, "rees{", "}").ok_or_else(|| parse_err("context", s))?;
    let mut ring = None;
    let mut ideal = None;
    for part in split_top(inner) {
        let (key, value) = part.split_once('=').ok_or_else(|| parse_err("context field", part))?;
        match key.trim() {
            "ring" if ring.is_none() => ring = Some(parse_ring(value)?),
            "a" if ideal.is_none() => ideal = Some(value.trim()),
            _ => return Err(parse_err("context field", part)),
        }
    }
    let ring = ring.ok_or_else(|| parse_err("context without ring", s))?;
    let ideal = parse_ideal(ring, ideal.ok_or_else(|| parse_err("context without ideal", s))?)?;
    ReesCtx::new(ring, ideal)
}

/// A context, or `<ring>[t]` / `<ring>[u]`.
pub fn parse_ambient(s: &str) -> Result<Ambient> {
    let s = s.trim();
    if s.starts_with("rees{") {
        return Ok(Ambient::Rees(parse_ctx(s)?));
    }
    let (ring, var) = if let Some(r) = s.strip_suffix("[t]") {
        (r, Var::T)
    } else if let Some(r) = s.strip_suffix("[u]") {
        (r, Var::U)
    } else {
        return Err(parse_err("ambient", s));
    };
    Ok(Ambient::poly(parse_ring(ring)?, var))
}

/// `[a, b, c]`.
pub fn parse_row(amb: &Ambient, s: &str) -> Result<Vec<Poly>> {
    let inner = bracketed(s, "[", "]").ok_or_else(|| parse_err("row", s))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|e| amb.parse_elem(e.trim())).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowFile {
    pub row: Vec<Poly>,
    pub dual: Option<Vec<Poly>>,
}

pub fn parse_row_file(amb: &Ambient, text: &str) -> Result<RowFile> {
    let mut row = None;
    let mut dual = None;
    for line in content_lines(text) {
        let (slot, rest) = if let Some(rest) = line.strip_prefix("row") {
            (&mut row, rest)
        } else if let Some(rest) = line.strip_prefix("dual") {
            (&mut dual, rest)
        } else if line.starts_with('[') {
            (&mut row, line)
        } else {
            return Err(parse_err("row file line", line));
        };
        if slot.is_some() {
            return Err(parse_err("repeated row file entry", line));
        }
        *slot = Some(parse_row(amb, rest)?);
    }
    let row = row.ok_or_else(|| Error::Parse("row file has no row".into()))?;
    if let Some(d) = &dual {
        if d.len() != row.len() {
            return Err(Error::LengthMismatch(row.len(), d.len()));
        }
    }
    Ok(RowFile { row, dual })
}

pub fn format_row_file(row: &[Poly], dual: Option<&[Poly]>) -> String {
    let mut out = format!("row {}\n", format_row(row));
    if let Some(d) = dual {
        out.push_str(&format!("dual {}\n", format_row(d)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub mat: Mat,
    pub inverse: Option<Mat>,
}

pub fn parse_matrix_file(amb: &Ambient, text: &str) -> Result<MatrixFile> {
    let mut lines = content_lines(text);
    if lines.next() != Some("matrix") {
        return Err(Error::Parse("matrix file must start with `matrix`".into()));
    }
    let mut mat = Vec::new();
    let mut inv: Option<Vec<Vec<Poly>>> = None;
    for line in lines {
        if line == "inverse" {
            if inv.is_some() {
                return Err(parse_err("repeated section", line));
            }
            inv = Some(Vec::new());
            continue;
        }
        let row = parse_row(amb, line)?;
        match inv.as_mut() {
            Some(rows) => rows.push(row),
            None => mat.push(row),
        }
    }
    let square = |rows: Vec<Vec<Poly>>| -> Result<Mat> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!(
                "matrix must be square and non-empty, got {n} rows"
            )));
        }
        Mat::from_rows(rows)
    };
    let mat = square(mat)?;
    let inverse = inv.map(square).transpose()?;
    if let Some(i) = &inverse {
        if i.nrows() != mat.nrows() {
            return Err(Error::LengthMismatch(mat.nrows(), i.nrows()));
        }
    }
    Ok(MatrixFile { mat, inverse })
}

pub fn format_matrix_file(mat: &Mat, inverse: Option<&Mat>) -> String {
    let mut out = format!("matrix\n{mat}");
    if let Some(i) = inverse {
        out.push_str(&format!("inverse\n{i}"));
    }
    out
}

/// A row file or a matrix file, told apart by the leading `matrix` line.
pub fn parse_subject(amb: &Ambient, text: &str) -> Result<Subject> {
    if content_lines(text).next() == Some("matrix") {
        Ok(Subject::Matrix(parse_matrix_file(amb, text)?.mat))
    } else {
        Ok(Subject::Row(parse_row_file(amb, text)?.row))
    }
}

fn malformed(msg: String) -> Error {
    Error::MalformedCertificate(msg)
}

/// Parses without checking the ops, for the verifier.
pub fn parse_cert_unchecked(text: &str) -> Result<ElemCert> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| malformed("empty certificate".into()))?;
    let rest = header
        .strip_prefix("cert ")
        .ok_or_else(|| malformed(format!("bad header `{header}`")))?;
    let (amb_part, n_part) = rest
        .rsplit_once(" n=")
        .ok_or_else(|| malformed(format!("bad header `{header}`")))?;
    let amb_text = amb_part
        .trim()
        .strip_prefix("ambient=")
        .ok_or_else(|| malformed(format!("bad header `{header}`")))?;
    let amb = parse_ambient(amb_text)?;
    let n: usize = n_part
        .trim()
        .parse()
        .map_err(|_| malformed(format!("bad size in `{header}`")))?;
    let mut ops = Vec::new();
    for line in lines {
        let bad = || malformed(format!("bad op line `{line}`"));
        let mut parts = line.splitn(4, ' ');
        if parts.next() != Some("E") {
            return Err(bad());
        }
        let idx = |p: Option<&str>| -> Result<usize> {
            let k: usize = p.and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            k.checked_sub(1)
                .ok_or_else(|| malformed(format!("indices are 1-based in `{line}`")))
        };
        let i = idx(parts.next())?;
        let j = idx(parts.next())?;
        let lambda = Poly::parse(amb.ring(), amb.var(), parts.next().ok_or_else(bad)?.trim())
            .map_err(|e| malformed(format!("`{line}`: {e}")))?;
        ops.push(ElemOp { i, j, lambda });
    }
    Ok(ElemCert::unchecked(amb, n, ops))
}

pub fn parse_cert(text: &str) -> Result<ElemCert> {
    let cert = parse_cert_unchecked(text)?;
    cert.validate()?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contexts() {
        let ctx = parse_ctx("rees{ring=Z, a=ideal[2]}").unwrap();
        assert_eq!(ctx.to_string(), "rees{ring=Z,a=ideal[2]}");
        let ctx = parse_ctx("rees{ a=ideal[6, 10] , ring=Zn:12 }").unwrap();
        assert_eq!(ctx.ring(), RingCtx::modular(12).unwrap());
        assert_eq!(parse_ctx(&ctx.to_string()).unwrap(), ctx);
        for bad in [
            "rees{ring=Z}",
            "rees{ring=W, a=ideal[2]}",
            "rees{ring=Z, a=ideal[t]}",
            "ring=Z",
            "rees{ring=Z,a=ideal[2],a=ideal[3]}",
        ] {
            assert!(parse_ctx(bad).is_err(), "{bad}");
        }
        assert!(parse_ctx("rees{ring=Fp:5, a=ideal[]}").unwrap().a_is_zero());
    }

    #[test]
    fn ambients() {
        for s in ["Fp:2[t]", "Zn:4[u]", "Q[t]", "rees{ring=Zn:4,a=ideal[2]}"] {
            assert_eq!(parse_ambient(s).unwrap().to_string(), s);
        }
        assert!(parse_ambient("Z[x]").is_err());
    }

    #[test]
    fn row_files() {
        let amb = parse_ambient("rees{ring=Zn:4,a=ideal[2]}").unwrap();
        let f = parse_row_file(&amb, "# a row\nrow [1 + 2*t, 2*t]\ndual [1 - 2*t, 0]\n").unwrap();
        assert_eq!(
            format_row_file(&f.row, f.dual.as_deref()),
            "row [1 + 2*t, 2*t]\ndual [1 + 2*t, 0]\n"
        );
        assert_eq!(parse_row_file(&amb, "[1, 0]").unwrap().row, amb.unit_vector(2, 0));
        assert!(matches!(
            parse_row_file(&amb, "row [t, 0]"),
            Err(Error::NotInAlgebra { degree: 1 })
        ));
        assert!(parse_row_file(&amb, "dual [1]").is_err());
        assert!(matches!(
            parse_row_file(&amb, "row [1, 0]\ndual [1]"),
            Err(Error::LengthMismatch(2, 1))
        ));
    }

    #[test]
    fn matrix_files() {
        let amb = parse_ambient("Fp:2[t]").unwrap();
        let text = "matrix\n[1, t]\n[0, 1]\ninverse\n[1, t]\n[0, 1]\n";
        let m = parse_matrix_file(&amb, text).unwrap();
        assert_eq!(format_matrix_file(&m.mat, m.inverse.as_ref()), text);
        assert!(parse_matrix_file(&amb, "matrix\n[1, t]\n").is_err());
        assert!(matches!(parse_subject(&amb, text).unwrap(), Subject::Matrix(_)));
        assert!(matches!(parse_subject(&amb, "[1, t]").unwrap(), Subject::Row(_)));
    }

    #[test]
    fn certificates() {
        let text = "cert ambient=Fp:2[t] n=2\nE 2 1 1\nE 1 2 1 + t\n";
        let cert = parse_cert(text).unwrap();
        assert_eq!(cert.to_string(), text);
        let rees = "cert ambient=rees{ring=Z,a=ideal[2]} n=2\nE 1 2 2*t + t^2\n";
        assert_eq!(parse_cert(rees).unwrap().to_string(), rees);
        for bad in [
            "cert ambient=Fp:2[t] n=2\nE 1 3 1\n",
            "cert ambient=Fp:2[t] n=2\nE 0 1 1\n",
            "cert ambient=Fp:2[t] n=2\nE 1 1 1\n",
            "cert ambient=rees{ring=Z,a=ideal[2]} n=2\nE 1 2 t\n",
            "cert n=2\n",
            "E 1 2 1\n",
            "cert ambient=Fp:2[t] n=2\nF 1 2 1\n",
        ] {
            assert!(matches!(parse_cert(bad), Err(Error::MalformedCertificate(_))), "{bad}");
        }
        assert_eq!(
            parse_cert_unchecked("cert ambient=Fp:2[t] n=2\nE 1 3 1\n")
                .unwrap()
                .len(),
            1
        );
    }
}
